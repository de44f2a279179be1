#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ybe/permutation.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using IntVec = std::vector<std::int64_t>;

/// An element g of the structure group G(X, r), named by pi(g) in Z^n.
///
/// pi is a bijective 1-cocycle, so the vector alone identifies the element;
/// equality is vector equality. The permutation phi(g) is recovered from the
/// germ table by residue lookup.
struct GroupElement {
  IntVec vec;

  std::int64_t length() const;  // coordinate sum; word length when positive
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GermOptions {
  std::uint64_t max_size = 1'000'000;  // guard on m^n
};

/// One element of Div(Delta^{m-1}).
struct Simple {
  IntVec residue;           // pi(s), every coordinate in 0..m-1
  Permutation phi;          // phi(s)
  std::vector<int> witness; // a shortest positive word for s, 0-based letters
};

/// The germ of simples of a solution of class m together with the group
/// arithmetic it supports.
///
/// Built by breadth-first search from the empty word over states
/// (pi-vector, permutation); a letter x moves (v, p) to
/// (v + e_{p(x)}, p * sigma_x) and states leaving {0..m-1}^n are dropped.
/// Generators are tried in ascending order, so witness words are the
/// shortest ones, first found in generator order.
class Germ {
 public:
  static Germ build(const Solution& s, GermOptions options = {});

  const Solution& solution() const { return solution_; }
  std::size_t rank() const { return solution_.size(); }
  int class_m() const { return class_m_; }
  std::size_t size() const { return simples_.size(); }

  /// All m^n simples sorted lexicographically by residue vector.
  const std::vector<Simple>& simples() const { return simples_; }
  const Simple& simple_at_residue(const IntVec& v) const;

  GroupElement identity() const;
  GroupElement generator(int x) const;

  /// Every integer vector names exactly one group element.
  GroupElement element_from_vector(IntVec v) const;

  /// phi(g), looked up at pi(g) mod m.
  const Permutation& phi(const GroupElement& g) const;

  /// pi(ab) = pi(a) + phi(a) . pi(b); cross-checks phi(ab) = phi(a) phi(b)
  /// against the table and throws PiCollision on mismatch.
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  /// Left-to-right product of generators; 0-based letters.
  GroupElement from_word(std::span<const int> word) const;

  /// Membership in the structure monoid, decided by search over states
  /// with vectors inside the box [0, v].
  bool is_positive(const IntVec& v) const;

  /// s is a left divisor of t: s^{-1} t is positive. Throws NotPositive
  /// unless both s and t are positive.
  bool left_divides(const GroupElement& s, const GroupElement& t) const;

 private:
  Germ(Solution s, int m) : solution_(std::move(s)), class_m_(m) {}
  std::size_t residue_index(const IntVec& v) const;

  Solution solution_;
  int class_m_;
  std::uint64_t max_search_ = GermOptions{}.max_size;
  std::vector<Simple> simples_;
};

/// Coordinates of `b` moved by `p`: result[p(j)] = b[j].
IntVec permute_coordinates(const Permutation& p, const IntVec& b);

struct DeltaDivisors {
  GroupElement delta;
  std::vector<GroupElement> divisors;  // 0/1 vectors, lexicographic order
};

/// The Garside element Delta (the left lcm of X, pi-vector all ones) and its
/// 2^n divisors, with the lcm properties verified. Throws ClassTooSmall when
/// m = 1, InvariantViolation if a lattice check fails.
DeltaDivisors delta_and_divisors(const Germ& g);

/// Simples ordered by (length, pi-vector).
bool canonical_less(const GroupElement& a, const GroupElement& b);

struct CosetTables {
  // one simple per coset of K = Ker phi, canonical order
  std::vector<GroupElement> kernel_cosets;
  // simples with phi = id: representatives of the N-cosets inside K
  std::vector<GroupElement> kernel_reps;
  std::size_t iyb_order = 0;
};

/// Builds T_K and T and verifies that u * v (u in T, v in T_K) lands in a
/// distinct N-coset for every pair, with pi(w) = pi(u) + pi(v) mod m.
CosetTables coset_tables(const Germ& g);

}  // namespace ybe
