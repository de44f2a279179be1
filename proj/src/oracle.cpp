#include "ybe/oracle.hpp"

#include <map>
#include <set>

#include "ybe/errors.hpp"
#include "ybe/matrix.hpp"

namespace ybe::oracle {

namespace {

Element multiply(const Element& a, const Element& b) {
  Element out{a.vec, a.perm * b.perm};
  for (std::size_t j = 0; j < b.vec.size(); ++j) {
    out.vec[static_cast<std::size_t>(a.perm(static_cast<int>(j)))] += b.vec[j];
  }
  return out;
}

Element invert(const Element& a) {
  const Permutation inv = a.perm.inverse();
  Element out{Vec(a.vec.size()), inv};
  // (a, p)^{-1} = (-p^{-1} a, p^{-1})
  for (std::size_t j = 0; j < a.vec.size(); ++j) {
    out.vec[static_cast<std::size_t>(inv(static_cast<int>(j)))] = -a.vec[j];
  }
  return out;
}

std::vector<Element> alphabet(const Solution& s, bool positive_only) {
  std::vector<Element> letters;
  for (std::size_t x = 0; x < s.size(); ++x) {
    Vec t(s.size(), 0);
    t[x] = 1;
    letters.push_back({std::move(t), s.sigmas()[x]});
  }
  if (!positive_only) {
    for (std::size_t x = 0; x < s.size(); ++x) letters.push_back(invert(letters[x]));
  }
  return letters;
}

std::string show(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

struct Exploration {
  std::map<Vec, Permutation> seen;
  std::vector<std::vector<Element>> layers;  // layers[r]: first reached at length r
  std::optional<std::string> collision;
};

// Breadth-first over words, one layer per word length. Stops early on the
// first vector reached with two permutations.
Exploration explore(const Solution& s, int radius, const BallOptions& options) {
  const auto letters = alphabet(s, options.positive_only);
  Exploration ex;
  Element one{Vec(s.size(), 0), Permutation::identity(s.size())};
  ex.seen.emplace(one.vec, one.perm);
  ex.layers.push_back({one});
  for (int r = 1; r <= radius; ++r) {
    std::vector<Element> next;
    for (const auto& g : ex.layers.back()) {
      for (const auto& l : letters) {
        Element h = multiply(g, l);
        auto [it, inserted] = ex.seen.try_emplace(h.vec, h.perm);
        if (!inserted) {
          if (it->second != h.perm) {
            ex.collision = "vector " + show(h.vec) + " carries " + it->second.to_string() +
                           " and " + h.perm.to_string();
            return ex;
          }
          continue;
        }
        if (ex.seen.size() > options.max_elements) {
          throw BallGuardExceeded("ball of radius " + std::to_string(radius) + " exceeds " +
                                  std::to_string(options.max_elements) + " elements");
        }
        next.push_back(std::move(h));
      }
    }
    ex.layers.push_back(std::move(next));
  }
  return ex;
}

}  // namespace

std::vector<Element> ball(const Solution& s, int radius, BallOptions options) {
  if (radius < 0) throw IndexOutOfRange("ball radius must be >= 0");
  Exploration ex = explore(s, radius, options);
  if (ex.collision) throw PiCollision(*ex.collision);
  std::vector<Element> out;
  out.reserve(ex.seen.size());
  for (auto& [v, p] : ex.seen) out.push_back({v, p});
  return out;
}

InjectivityReport check_pi_injectivity(const Solution& s, int radius) {
  InjectivityReport report;
  report.radius = radius;
  const Exploration ex = explore(s, radius, {});
  report.states = ex.seen.size();
  report.passed = !ex.collision;
  report.witness = ex.collision;
  return report;
}

CountsReport check_counts(const Solution& s, std::size_t max_elements) {
  const std::size_t n = s.size();
  CountsReport report;
  report.class_m = class_of(s);
  const auto m = static_cast<std::int64_t>(report.class_m);

  report.germ_expected = 1;
  for (std::size_t i = 0; i < n; ++i) report.germ_expected *= static_cast<std::uint64_t>(m);
  report.div_delta_expected = std::uint64_t{1} << n;

  // Positive words are monotone in pi, so every positive element with all
  // coordinates below m has length at most n(m-1).
  const int radius = static_cast<int>(n) * (report.class_m - 1);
  const auto positives = ball(s, radius, {max_elements, true});
  std::set<Permutation> perms;
  std::uint64_t div_delta = 0;
  for (const auto& e : positives) {
    bool in_box = true;
    bool zero_one = true;
    for (const auto c : e.vec) {
      in_box = in_box && c >= 0 && c < m;
      zero_one = zero_one && (c == 0 || c == 1);
    }
    if (!in_box) continue;
    ++report.germ_count;
    if (zero_one) ++div_delta;
    if (e.perm.is_identity()) ++report.kernel_reps;
    perms.insert(e.perm);
  }
  report.kernel_cosets = perms.size();
  if (report.class_m >= 2) report.div_delta_count = div_delta;

  // Closure by repeated pairwise products until nothing new appears.
  std::set<Permutation> group(s.sigmas().begin(), s.sigmas().end());
  group.insert(Permutation::identity(n));
  for (;;) {
    std::set<Permutation> grown = group;
    for (const auto& a : group) {
      for (const auto& b : group) grown.insert(a * b);
    }
    if (grown.size() == group.size()) break;
    group = std::move(grown);
  }
  report.iyb_order = group.size();

  report.passed = report.germ_count == report.germ_expected &&
                  (!report.div_delta_count || *report.div_delta_count == report.div_delta_expected) &&
                  report.kernel_reps * report.kernel_cosets == report.germ_expected &&
                  report.kernel_cosets == report.iyb_order;
  return report;
}

std::vector<std::int64_t> affine_entries(const Element& e) {
  const std::size_t n = e.vec.size();
  const std::size_t w = n + 1;
  std::vector<std::int64_t> out(w * w, 0);
  for (std::size_t j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(e.perm(static_cast<int>(j))) * w + j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) out[i * w + n] = e.vec[i];
  out[n * w + n] = 1;
  return out;
}

SpanReport check_span_stabilization(const Solution& s, int max_radius, std::size_t max_elements) {
  if (max_radius < 0) throw IndexOutOfRange("radius must be >= 0");
  const Exploration ex = explore(s, max_radius, {max_elements, false});
  if (ex.collision) throw PiCollision(*ex.collision);

  SpanReport report;
  const std::size_t w = s.size() + 1;
  IncrementalBasis basis(w * w);
  std::size_t total = 0;
  for (const auto& layer : ex.layers) {
    for (const auto& e : layer) {
      if (basis.full()) break;
      basis.add(affine_entries(e));
    }
    total += layer.size();
    report.ball_sizes.push_back(total);
    report.ranks.push_back(basis.rank());
  }
  const auto& r = report.ranks;
  if (r.size() >= 2 && r[r.size() - 1] == r[r.size() - 2]) report.stabilized_rank = r.back();
  return report;
}

}  // namespace ybe::oracle
