#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ybe/permutation.hpp"

namespace ybe {

/// A finite non-degenerate involutive set-theoretic solution (X, r) of the
/// Yang-Baxter equation on X = {0..n-1}, stored as the permutation tables
/// sigma_x and gamma_y with r(x, y) = (sigma_x(y), gamma_y(x)).
///
/// Every constructed Solution has been checked: all tables are bijective,
/// gamma agrees with the involutive closed form
/// gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x), r o r = id, and r is braided.
class Solution {
 public:
  /// Derives gamma from sigma and validates.
  static Solution from_sigma(std::vector<Permutation> sigma);

  /// Cross-checks the supplied gamma against sigma and validates.
  static Solution from_tables(std::vector<Permutation> sigma,
                              std::vector<Permutation> gamma);

  std::size_t size() const { return sigma_.size(); }

  const Permutation& sigma(int x) const;
  const Permutation& gamma(int y) const;
  const std::vector<Permutation>& sigmas() const { return sigma_; }
  const std::vector<Permutation>& gammas() const { return gamma_; }

  /// r(x, y) = (sigma_x(y), gamma_y(x)); 0-based. Throws IndexOutOfRange.
  std::pair<int, int> apply(int x, int y) const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  Solution(std::vector<Permutation> sigma, std::vector<Permutation> gamma)
      : sigma_(std::move(sigma)), gamma_(std::move(gamma)) {}
  void validate() const;

  std::vector<Permutation> sigma_;
  std::vector<Permutation> gamma_;
};

/// Parses the JSON solution format. Throws ParseError on malformed content
/// and a ValidationError subclass when the tables fail an axiom.
Solution load_solution(std::string_view json_text);
Solution load_solution_file(const std::filesystem::path& path);

/// JSON text in the same format (1-based one-line sigma and gamma).
std::string solution_to_json(const Solution& s);

// ---------------------------------------------------------------------------
// Invariants of a single solution.

/// D(x) = sigma_x^{-1}(x).
Permutation diagonal_map(const Solution& s);

/// D^{-1}(y) = gamma_y^{-1}(y), computed from the gamma tables.
Permutation diagonal_inverse_from_gamma(const Solution& s);

/// The IYB group generated by the sigma_x, sorted.
std::vector<Permutation> iyb_group(const Solution& s);

/// Minimal m >= 1 with sigma_x sigma_{D(x)} ... sigma_{D^{m-1}(x)} = id for
/// all x. `bound` defaults to the order of the IYB group; exceeding it
/// throws ClassSearchExceeded.
int class_of(const Solution& s, std::optional<int> bound = std::nullopt);

/// sigma_x sigma_{sigma_x^{-1}(x)} = id for all x; equivalent to class <= 2.
bool satisfies_condition_c(const Solution& s);

/// r(x, x) = (x, x) for all x.
bool is_square_free(const Solution& s);

/// Word k is (k, D(k), ..., D^{m-1}(k)), 0-based letters.
std::vector<std::vector<int>> frozen_words(const Solution& s, int class_m);
std::vector<std::vector<int>> frozen_words(const Solution& s);

struct Retraction {
  Solution quotient;
  // index -> class index; classes numbered by smallest member, ascending
  std::vector<int> class_map;
};

Retraction retraction(const Solution& s);

/// Sizes |X|, |Ret(X)|, |Ret^2(X)|, ... until size 1 or a step fails to
/// shrink.
std::vector<std::size_t> retraction_levels(const Solution& s);

/// Smallest k with |Ret^k| = 1, or nullopt when irretractable. A one-point
/// solution has level 0.
std::optional<int> multipermutation_level(const Solution& s);

struct SolutionProfile {
  std::size_t n = 0;
  int class_m = 0;
  Permutation diagonal;
  std::vector<std::vector<int>> frozen;  // 0-based
  bool condition_c = false;
  bool square_free = false;
  std::vector<std::size_t> retraction_sizes;
  std::optional<int> multipermutation_level;  // nullopt: irretractable
  std::size_t iyb_order = 0;
};

SolutionProfile profile(const Solution& s);

}  // namespace ybe
