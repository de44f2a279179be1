#include "ybe/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string vec_str(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

std::int64_t GroupElement::length() const {
  return std::accumulate(vec.begin(), vec.end(), std::int64_t{0});
}

IntVec permute_coordinates(const Permutation& p, const IntVec& b) {
  IntVec out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    out[static_cast<std::size_t>(p(static_cast<int>(j)))] = b[j];
  }
  return out;
}

Germ Germ::build(const Solution& s, GermOptions options) {
  const int m = class_of(s);
  const std::size_t n = s.size();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > options.max_size / static_cast<std::uint64_t>(m)) {
      throw GermGuardExceeded("germ size " + std::to_string(m) + "^" + std::to_string(n) +
                              " exceeds the guard " + std::to_string(options.max_size));
    }
    total *= static_cast<std::uint64_t>(m);
  }

  Germ germ(s, m);
  std::vector<std::optional<Permutation>> phi(total);
  std::vector<std::vector<int>> witness(total);

  IntVec start(n, 0);
  phi[0] = Permutation::identity(n);
  std::deque<std::pair<IntVec, std::size_t>> queue{{start, 0}};
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto [v, code] = std::move(queue.front());
    queue.pop_front();
    const Permutation p = *phi[code];
    for (std::size_t x = 0; x < n; ++x) {
      const auto coord = static_cast<std::size_t>(p(static_cast<int>(x)));
      if (v[coord] + 1 >= m) continue;
      IntVec w = v;
      ++w[coord];
      const std::size_t next = germ.residue_index(w);
      Permutation q = p * s.sigmas()[x];
      if (phi[next]) {
        if (*phi[next] != q) {
          throw PiCollision("vector " + vec_str(w) + " reached with " +
                            phi[next]->to_string() + " and " + q.to_string());
        }
        continue;
      }
      phi[next] = std::move(q);
      witness[next] = witness[code];
      witness[next].push_back(static_cast<int>(x));
      ++reached;
      queue.emplace_back(std::move(w), next);
    }
  }
  if (reached != total) {
    throw InvariantViolation("germ search reached " + std::to_string(reached) +
                             " simples, expected " + std::to_string(total));
  }

  germ.simples_.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    IntVec residue(n);
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      residue[i] = static_cast<std::int64_t>(c % static_cast<std::size_t>(m));
      c /= static_cast<std::size_t>(m);
    }
    germ.simples_.push_back({std::move(residue), std::move(*phi[code]), std::move(witness[code])});
  }
  germ.max_search_ = options.max_size;
  return germ;
}

std::size_t Germ::residue_index(const IntVec& v) const {
  std::size_t code = 0;
  for (const auto c : v) {
    code = code * static_cast<std::size_t>(class_m_) +
           static_cast<std::size_t>(floor_mod(c, class_m_));
  }
  return code;
}

const Simple& Germ::simple_at_residue(const IntVec& v) const {
  if (v.size() != rank()) {
    throw IndexOutOfRange("vector of length " + std::to_string(v.size()) +
                          ", expected " + std::to_string(rank()));
  }
  return simples_[residue_index(v)];
}

GroupElement Germ::identity() const { return {IntVec(rank(), 0)}; }

GroupElement Germ::generator(int x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= rank()) {
    throw IndexOutOfRange("generator " + std::to_string(x + 1) + " not in 1.." +
                          std::to_string(rank()));
  }
  GroupElement g = identity();
  g.vec[static_cast<std::size_t>(x)] = 1;
  return g;
}

GroupElement Germ::element_from_vector(IntVec v) const {
  if (v.size() != rank()) {
    throw IndexOutOfRange("vector of length " + std::to_string(v.size()) +
                          ", expected " + std::to_string(rank()));
  }
  return {std::move(v)};
}

const Permutation& Germ::phi(const GroupElement& g) const {
  return simple_at_residue(g.vec).phi;
}

GroupElement Germ::multiply(const GroupElement& a, const GroupElement& b) const {
  const Permutation& pa = phi(a);
  GroupElement out{permute_coordinates(pa, b.vec)};
  for (std::size_t i = 0; i < out.vec.size(); ++i) out.vec[i] += a.vec[i];
  if (phi(out) != pa * phi(b)) {
    throw PiCollision("phi(ab) from the table differs from phi(a)phi(b) at " +
                      vec_str(out.vec));
  }
  return out;
}

GroupElement Germ::inverse(const GroupElement& a) const {
  const Permutation& pa = phi(a);
  GroupElement out{IntVec(a.vec.size())};
  for (std::size_t j = 0; j < out.vec.size(); ++j) {
    out.vec[j] = -a.vec[static_cast<std::size_t>(pa(static_cast<int>(j)))];
  }
  return out;
}

GroupElement Germ::from_word(std::span<const int> word) const {
  GroupElement g = identity();
  for (const int x : word) g = multiply(g, generator(x));
  return g;
}

bool Germ::is_positive(const IntVec& v) const {
  if (v.size() != rank()) {
    throw IndexOutOfRange("vector of length " + std::to_string(v.size()) +
                          ", expected " + std::to_string(rank()));
  }
  if (std::any_of(v.begin(), v.end(), [](auto c) { return c < 0; })) return false;

  const std::size_t n = rank();
  std::uint64_t states = 1;
  for (const auto c : v) {
    const auto extent = static_cast<std::uint64_t>(c) + 1;
    if (states > max_search_ / extent) {
      throw GermGuardExceeded("positivity search box for " + vec_str(v) +
                              " exceeds the guard " + std::to_string(max_search_));
    }
    states *= extent;
  }
  auto index = [&](const IntVec& w) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      code = code * static_cast<std::size_t>(v[i] + 1) + static_cast<std::size_t>(w[i]);
    }
    return code;
  };

  std::vector<std::optional<Permutation>> seen(states);
  seen[0] = Permutation::identity(n);
  std::deque<IntVec> queue{IntVec(n, 0)};
  const std::size_t target = index(v);
  while (!queue.empty()) {
    IntVec w = std::move(queue.front());
    queue.pop_front();
    const std::size_t code = index(w);
    if (code == target) return true;
    const Permutation p = *seen[code];
    for (std::size_t x = 0; x < n; ++x) {
      const auto coord = static_cast<std::size_t>(p(static_cast<int>(x)));
      if (w[coord] + 1 > v[coord]) continue;
      IntVec next = w;
      ++next[coord];
      const std::size_t nc = index(next);
      if (seen[nc]) continue;
      seen[nc] = p * solution_.sigmas()[x];
      queue.push_back(std::move(next));
    }
  }
  return false;
}

bool Germ::left_divides(const GroupElement& s, const GroupElement& t) const {
  if (!is_positive(s.vec)) throw NotPositive("left_divides: " + vec_str(s.vec) + " is not positive");
  if (!is_positive(t.vec)) throw NotPositive("left_divides: " + vec_str(t.vec) + " is not positive");
  return is_positive(multiply(inverse(s), t).vec);
}

DeltaDivisors delta_and_divisors(const Germ& g) {
  if (g.class_m() < 2) {
    throw ClassTooSmall("Delta is only defined here for class m >= 2 (got m = " +
                        std::to_string(g.class_m()) + ")");
  }
  const std::size_t n = g.rank();
  DeltaDivisors out{g.element_from_vector(IntVec(n, 1)), {}};
  for (const auto& s : g.simples()) {
    if (std::all_of(s.residue.begin(), s.residue.end(), [](auto c) { return c <= 1; })) {
      out.divisors.push_back({s.residue});
    }
  }
  if (out.divisors.size() != (std::size_t{1} << n)) {
    throw InvariantViolation("|Div(Delta)| = " + std::to_string(out.divisors.size()));
  }

  // Each s in Div(Delta) is the left lcm of its one-letter left divisors,
  // which are exactly the letters in the support of pi(s). The lcm property
  // is checked against every simple.
  for (const auto& s : out.divisors) {
    std::vector<GroupElement> letters;
    for (std::size_t x = 0; x < n; ++x) {
      const GroupElement e = g.generator(static_cast<int>(x));
      const bool divides = g.left_divides(e, s);
      if (divides != (s.vec[x] != 0)) {
        throw InvariantViolation("left divisors of " + vec_str(s.vec) +
                                 " do not match its support");
      }
      if (divides) letters.push_back(e);
    }
    if (static_cast<std::int64_t>(letters.size()) != s.length()) {
      throw InvariantViolation("wrong number of letter divisors for " + vec_str(s.vec));
    }
    for (const auto& c : g.simples()) {
      const GroupElement candidate{c.residue};
      const bool common = std::all_of(letters.begin(), letters.end(), [&](const auto& e) {
        return g.left_divides(e, candidate);
      });
      if (common && !g.left_divides(s, candidate)) {
        throw InvariantViolation(vec_str(s.vec) + " is not the left lcm of its letters");
      }
    }
  }
  return out;
}

bool canonical_less(const GroupElement& a, const GroupElement& b) {
  const auto la = a.length();
  const auto lb = b.length();
  if (la != lb) return la < lb;
  return a.vec < b.vec;
}

CosetTables coset_tables(const Germ& g) {
  CosetTables out;
  out.iyb_order = iyb_group(g.solution()).size();

  std::map<Permutation, std::vector<GroupElement>> fibers;
  for (const auto& s : g.simples()) fibers[s.phi].push_back({s.residue});

  if (fibers.size() != out.iyb_order) {
    throw InvariantViolation("phi takes " + std::to_string(fibers.size()) +
                             " values on simples, IYB group has order " +
                             std::to_string(out.iyb_order));
  }
  const std::size_t fiber_size = g.size() / out.iyb_order;
  for (auto& [perm, members] : fibers) {
    if (members.size() != fiber_size) {
      throw InvariantViolation("coset of K for " + perm.to_string() + " holds " +
                               std::to_string(members.size()) + " simples, expected " +
                               std::to_string(fiber_size));
    }
    std::sort(members.begin(), members.end(), canonical_less);
    out.kernel_cosets.push_back(members.front());
  }
  std::sort(out.kernel_cosets.begin(), out.kernel_cosets.end(), canonical_less);
  out.kernel_reps = fibers.at(Permutation::identity(g.rank()));

  const auto m = static_cast<std::int64_t>(g.class_m());
  std::set<IntVec> hit;
  for (const auto& u : out.kernel_reps) {
    for (const auto& v : out.kernel_cosets) {
      const GroupElement uv = g.multiply(u, v);
      const Simple& w = g.simple_at_residue(uv.vec);
      for (std::size_t i = 0; i < g.rank(); ++i) {
        if (floor_mod(w.residue[i] - u.vec[i] - v.vec[i], m) != 0) {
          throw InvariantViolation("pi(w) is not congruent to pi(u) + pi(v) for u = " +
                                   vec_str(u.vec) + ", v = " + vec_str(v.vec));
        }
      }
      if (w.phi != g.phi(v)) {
        throw InvariantViolation("w lies in a different K-coset than v = " + vec_str(v.vec));
      }
      hit.insert(w.residue);
    }
  }
  if (hit.size() != g.size()) {
    throw InvariantViolation("T x T_K covers " + std::to_string(hit.size()) + " of " +
                             std::to_string(g.size()) + " simples");
  }
  return out;
}

}  // namespace ybe
