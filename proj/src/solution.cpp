#include "ybe/solution.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

using json = nlohmann::json;

std::string pair_str(int x, int y) {
  return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
}

std::vector<int> read_int_row(const json& row, const std::string& where) {
  if (!row.is_array()) throw ParseError(where + " must be an array");
  std::vector<int> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_number_integer()) throw ParseError(where + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<Permutation> read_table(const json& doc, const char* key, std::size_t n) {
  const json& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError(std::string("\"") + key + "\" must be an array of " +
                     std::to_string(n) + " rows");
  }
  std::vector<Permutation> table;
  table.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = std::string(key) + "_" + std::to_string(i + 1);
    std::vector<int> line = read_int_row(rows[i], where);
    if (line.size() != n) {
      throw ParseError(where + " has length " + std::to_string(line.size()) +
                       ", expected " + std::to_string(n));
    }
    try {
      table.push_back(Permutation::from_one_line(line));
    } catch (const NotBijective& e) {
      throw NotBijective(where + ": " + e.what());
    }
  }
  return table;
}

std::vector<Permutation> read_cycle_table(const json& doc, std::size_t n) {
  const json& rows = doc.at("sigma_cycles");
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("\"sigma_cycles\" must be an array of " + std::to_string(n) +
                     " cycle lists");
  }
  std::vector<Permutation> table;
  table.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "sigma_" + std::to_string(i + 1);
    if (!rows[i].is_array()) throw ParseError(where + " must be a list of cycles");
    std::vector<std::vector<int>> cycles;
    for (const auto& c : rows[i]) cycles.push_back(read_int_row(c, where));
    try {
      table.push_back(Permutation::from_cycles(n, cycles));
    } catch (const NotBijective& e) {
      throw NotBijective(where + ": " + e.what());
    }
  }
  return table;
}

}  // namespace

Solution Solution::from_sigma(std::vector<Permutation> sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) throw ValidationError("solution must have at least one element");
  for (std::size_t x = 0; x < n; ++x) {
    if (sigma[x].size() != n) {
      throw NotBijective("sigma_" + std::to_string(x + 1) + " acts on " +
                         std::to_string(sigma[x].size()) + " points, expected " +
                         std::to_string(n));
    }
  }
  std::vector<Permutation> sigma_inv;
  sigma_inv.reserve(n);
  for (const auto& p : sigma) sigma_inv.push_back(p.inverse());

  std::vector<Permutation> gamma;
  gamma.reserve(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<int> row(n);
    for (std::size_t x = 0; x < n; ++x) {
      const int u = sigma[x](static_cast<int>(y));
      row[x] = sigma_inv[static_cast<std::size_t>(u)](static_cast<int>(x));
    }
    try {
      gamma.emplace_back(std::move(row));
    } catch (const NotBijective& e) {
      throw NotBijective("gamma_" + std::to_string(y + 1) + " (derived): " + e.what());
    }
  }
  Solution s(std::move(sigma), std::move(gamma));
  s.validate();
  return s;
}

Solution Solution::from_tables(std::vector<Permutation> sigma,
                               std::vector<Permutation> gamma) {
  const std::size_t n = sigma.size();
  if (n == 0) throw ValidationError("solution must have at least one element");
  if (gamma.size() != n) {
    throw GammaInconsistent("gamma has " + std::to_string(gamma.size()) +
                            " rows, sigma has " + std::to_string(n));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (sigma[x].size() != n || gamma[x].size() != n) {
      throw NotBijective("row " + std::to_string(x + 1) + " does not act on " +
                         std::to_string(n) + " points");
    }
  }
  Solution s(std::move(sigma), std::move(gamma));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int u = s.sigma_[x](static_cast<int>(y));
      const int expected = s.sigma_[static_cast<std::size_t>(u)].inverse()(static_cast<int>(x));
      if (s.gamma_[y](static_cast<int>(x)) != expected) {
        throw GammaInconsistent(
            "gamma_" + std::to_string(y + 1) + "(" + std::to_string(x + 1) + ") = " +
            std::to_string(s.gamma_[y](static_cast<int>(x)) + 1) +
            " but the involutive form gives " + std::to_string(expected + 1));
      }
    }
  }
  s.validate();
  return s;
}

void Solution::validate() const {
  const int n = static_cast<int>(size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto [u, v] = apply(x, y);
      const auto [x2, y2] = apply(u, v);
      if (x2 != x || y2 != y) {
        throw NotInvolutive("r(r" + pair_str(x, y) + ") = " + pair_str(x2, y2));
      }
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // r12 r23 r12
        auto [a1, b1] = apply(x, y);
        int c1 = z;
        std::tie(b1, c1) = apply(b1, c1);
        std::tie(a1, b1) = apply(a1, b1);
        // r23 r12 r23
        int a2 = x;
        auto [b2, c2] = apply(y, z);
        std::tie(a2, b2) = apply(a2, b2);
        std::tie(b2, c2) = apply(b2, c2);
        if (a1 != a2 || b1 != b2 || c1 != c2) {
          throw NotBraided("braid relation fails on (" + std::to_string(x + 1) + "," +
                           std::to_string(y + 1) + "," + std::to_string(z + 1) + ")");
        }
      }
    }
  }

  // phi(x)phi(y) = phi(sigma_x(y))phi(gamma_y(x)) must hold for phi to be a
  // homomorphism under the (f*g)(i) = f(g(i)) convention.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto [u, v] = apply(x, y);
      if (sigma(x) * sigma(y) != sigma(u) * sigma(v)) {
        throw NotBraided("sigma_x sigma_y != sigma_u sigma_v for relation " +
                         pair_str(x, y) + " = " + pair_str(u, v));
      }
    }
  }
}

const Permutation& Solution::sigma(int x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= size()) {
    throw IndexOutOfRange("index " + std::to_string(x + 1) + " not in 1.." +
                          std::to_string(size()));
  }
  return sigma_[static_cast<std::size_t>(x)];
}

const Permutation& Solution::gamma(int y) const {
  if (y < 0 || static_cast<std::size_t>(y) >= size()) {
    throw IndexOutOfRange("index " + std::to_string(y + 1) + " not in 1.." +
                          std::to_string(size()));
  }
  return gamma_[static_cast<std::size_t>(y)];
}

std::pair<int, int> Solution::apply(int x, int y) const {
  return {sigma(x)(y), gamma(y)(x)};
}

Solution load_solution(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("solution file must hold a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ParseError("\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  const bool has_sigma = doc.contains("sigma");
  const bool has_cycles = doc.contains("sigma_cycles");
  if (has_sigma == has_cycles) {
    throw ParseError("exactly one of \"sigma\" and \"sigma_cycles\" must be present");
  }
  std::vector<Permutation> sigma =
      has_sigma ? read_table(doc, "sigma", n) : read_cycle_table(doc, n);
  if (doc.contains("gamma")) {
    return Solution::from_tables(std::move(sigma), read_table(doc, "gamma", n));
  }
  return Solution::from_sigma(std::move(sigma));
}

Solution load_solution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_solution(buf.str());
}

std::string solution_to_json(const Solution& s) {
  json doc;
  doc["n"] = s.size();
  json sigma = json::array();
  json gamma = json::array();
  for (std::size_t x = 0; x < s.size(); ++x) {
    sigma.push_back(s.sigmas()[x].one_line());
    gamma.push_back(s.gammas()[x].one_line());
  }
  doc["sigma"] = std::move(sigma);
  doc["gamma"] = std::move(gamma);
  return doc.dump();
}

Permutation diagonal_map(const Solution& s) {
  std::vector<int> image(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    image[x] = s.sigmas()[x].inverse()(static_cast<int>(x));
  }
  return Permutation(std::move(image));
}

Permutation diagonal_inverse_from_gamma(const Solution& s) {
  std::vector<int> image(s.size());
  for (std::size_t y = 0; y < s.size(); ++y) {
    image[y] = s.gammas()[y].inverse()(static_cast<int>(y));
  }
  return Permutation(std::move(image));
}

std::vector<Permutation> iyb_group(const Solution& s) {
  return generated_group(s.sigmas(), s.size());
}

int class_of(const Solution& s, std::optional<int> bound) {
  const int limit = bound ? *bound : static_cast<int>(iyb_group(s).size());
  const Permutation d = diagonal_map(s);
  const std::size_t n = s.size();

  // products[x] = sigma_x sigma_{D(x)} ... sigma_{D^{m-1}(x)}, cursor[x] = D^m(x)
  std::vector<Permutation> products(n, Permutation::identity(n));
  std::vector<int> cursor(n);
  for (std::size_t x = 0; x < n; ++x) cursor[x] = static_cast<int>(x);

  for (int m = 1; m <= limit; ++m) {
    bool all_identity = true;
    for (std::size_t x = 0; x < n; ++x) {
      products[x] = products[x] * s.sigma(cursor[x]);
      cursor[x] = d(cursor[x]);
      all_identity = all_identity && products[x].is_identity();
    }
    if (all_identity) return m;
  }
  throw ClassSearchExceeded("no class m <= " + std::to_string(limit));
}

bool satisfies_condition_c(const Solution& s) {
  const Permutation d = diagonal_map(s);
  for (std::size_t x = 0; x < s.size(); ++x) {
    const int xi = static_cast<int>(x);
    if (!(s.sigma(xi) * s.sigma(d(xi))).is_identity()) return false;
  }
  return true;
}

bool is_square_free(const Solution& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    const int xi = static_cast<int>(x);
    if (s.apply(xi, xi) != std::pair{xi, xi}) return false;
  }
  return true;
}

std::vector<std::vector<int>> frozen_words(const Solution& s, int class_m) {
  const Permutation d = diagonal_map(s);
  std::vector<std::vector<int>> words(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    int letter = static_cast<int>(k);
    for (int i = 0; i < class_m; ++i) {
      words[k].push_back(letter);
      letter = d(letter);
    }
  }
  return words;
}

std::vector<std::vector<int>> frozen_words(const Solution& s) {
  return frozen_words(s, class_of(s));
}

Retraction retraction(const Solution& s) {
  const std::size_t n = s.size();
  std::map<Permutation, int> class_index;
  std::vector<int> class_map(n);
  std::vector<int> representative;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] =
        class_index.try_emplace(s.sigmas()[x], static_cast<int>(representative.size()));
    if (inserted) representative.push_back(static_cast<int>(x));
    class_map[x] = it->second;
  }

  const std::size_t k = representative.size();
  std::vector<Permutation> sigma;
  std::vector<Permutation> gamma;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<int> srow(k);
    std::vector<int> grow(k);
    for (std::size_t b = 0; b < k; ++b) {
      const int x = representative[a];
      const int y = representative[b];
      srow[b] = class_map[static_cast<std::size_t>(s.sigma(x)(y))];
      // gamma'_[a]([b]) = [gamma_{rep a}(rep b)]
      grow[b] = class_map[static_cast<std::size_t>(s.gamma(x)(y))];
    }
    sigma.emplace_back(std::move(srow));
    gamma.emplace_back(std::move(grow));
  }
  return {Solution::from_tables(std::move(sigma), std::move(gamma)), std::move(class_map)};
}

std::vector<std::size_t> retraction_levels(const Solution& s) {
  std::vector<std::size_t> sizes{s.size()};
  Solution current = s;
  while (current.size() > 1) {
    Solution next = retraction(current).quotient;
    if (next.size() == current.size()) break;
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

std::optional<int> multipermutation_level(const Solution& s) {
  const auto sizes = retraction_levels(s);
  if (sizes.back() != 1) return std::nullopt;
  return static_cast<int>(sizes.size()) - 1;
}

SolutionProfile profile(const Solution& s) {
  SolutionProfile p;
  p.n = s.size();
  p.iyb_order = iyb_group(s).size();
  p.class_m = class_of(s, static_cast<int>(p.iyb_order));
  p.diagonal = diagonal_map(s);
  p.frozen = frozen_words(s, p.class_m);
  p.condition_c = satisfies_condition_c(s);
  p.square_free = is_square_free(s);
  p.retraction_sizes = retraction_levels(s);
  p.multipermutation_level = multipermutation_level(s);
  return p;
}

}  // namespace ybe
