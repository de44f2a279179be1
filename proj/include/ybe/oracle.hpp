#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/permutation.hpp"
#include "ybe/solution.hpp"

// Brute-force cross-checks. Everything here works from the Solution tables
// alone, multiplying in Z^n x| Sym_n by folding words; nothing is shared with
// the germ construction.
namespace ybe::oracle {

using Vec = std::vector<std::int64_t>;

/// (pi(g), phi(g)) computed directly in the semidirect product.
struct Element {
  Vec vec;
  Permutation perm;
};

struct BallOptions {
  std::size_t max_elements = 1'000'000;
  bool positive_only = false;  // letters x only, no inverses
};

/// All products of at most `radius` letters from X (and X^{-1} unless
/// positive_only), deduplicated by vector and sorted by vector. Throws
/// BallGuardExceeded past the guard and PiCollision if one vector shows up
/// with two permutations.
std::vector<Element> ball(const Solution& s, int radius, BallOptions options = {});

struct InjectivityReport {
  int radius = 0;
  std::size_t states = 0;  // distinct (vector, permutation) pairs reached
  bool passed = true;
  std::optional<std::string> witness;
};

/// Every word over X and X^{-1} of length <= radius; two words with the
/// same vector must have the same permutation.
InjectivityReport check_pi_injectivity(const Solution& s, int radius);

struct CountsReport {
  int class_m = 0;
  std::uint64_t germ_expected = 0;  // m^n
  std::uint64_t germ_count = 0;     // positive elements with coords < m
  std::optional<std::uint64_t> div_delta_count;  // 0/1 vectors; m >= 2 only
  std::uint64_t div_delta_expected = 0;          // 2^n
  std::uint64_t kernel_reps = 0;    // |T|
  std::uint64_t kernel_cosets = 0;  // |T_K|
  std::uint64_t iyb_order = 0;      // closure under pairwise products
  bool passed = false;
};

CountsReport check_counts(const Solution& s, std::size_t max_elements = 1'000'000);

struct SpanReport {
  std::vector<std::size_t> ball_sizes;  // per radius 0..max_radius
  std::vector<std::size_t> ranks;       // rank of {psi(g) : g in ball(r)}
  std::optional<std::size_t> stabilized_rank;  // last two ranks equal
};

SpanReport check_span_stabilization(const Solution& s, int max_radius,
                                    std::size_t max_elements = 1'000'000);

/// Independent psi: [A | vec; 0 | 1] with A[perm(j)][j] = 1, row-major.
std::vector<std::int64_t> affine_entries(const Element& e);

}  // namespace ybe::oracle
