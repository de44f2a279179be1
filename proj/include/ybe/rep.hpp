#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybe/group.hpp"
#include "ybe/matrix.hpp"

namespace ybe {

/// An (n+1)x(n+1) integer matrix [A | t; 0 | 1] with A a permutation
/// matrix: the image of a group element in GL_{n+1}(Z).
class AffineMatrix {
 public:
  /// Column j of A has its 1 in row p(j); the last column carries t.
  AffineMatrix(const Permutation& p, const IntVec& translation);

  /// Throws InvariantViolation unless `m` has the affine block shape.
  static AffineMatrix from_matrix(IntMatrix m);

  std::size_t n() const { return m_.rows() - 1; }
  const IntMatrix& matrix() const { return m_; }
  Permutation permutation() const;
  IntVec translation() const;

  friend AffineMatrix operator*(const AffineMatrix& a, const AffineMatrix& b);
  friend bool operator==(const AffineMatrix&, const AffineMatrix&) = default;

 private:
  explicit AffineMatrix(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

/// psi(g) = [A_{phi(g)} | pi(g); 0 | 1].
AffineMatrix psi(const Germ& g, const GroupElement& e);

/// The (n+1)x(n+1) matrix with a single 1 at row k, last column (0-based k).
IntMatrix e_matrix(std::size_t n, int k);

struct Decomposition {
  GroupElement simple;
  IntVec alpha;  // g = (prod theta_i^{alpha_i}) * simple
};

/// Splits g as an element of N times a simple. Verifies
/// psi(g) = psi(s) + m * sum alpha_i E_i entrywise (InvariantViolation).
Decomposition decompose(const Germ& g, const GroupElement& e);

struct LabeledMatrix {
  std::string label;
  GroupElement element;
  std::vector<int> word;  // 0-based letters of a positive word for element
  AffineMatrix matrix;
};

/// psi(theta_1..theta_n) followed by psi(v) for v in T_K, in canonical order.
std::vector<LabeledMatrix> spanning_set(const Germ& g, const CosetTables& c);

std::string word_label(const std::vector<int>& word);  // "x1x3", or "1" if empty

struct DimensionReport {
  std::size_t n = 0;
  int class_m = 0;
  std::size_t iyb_order = 0;
  std::vector<std::string> spanning_labels;
  std::vector<std::size_t> basis_indices;
  std::vector<std::string> basis_labels;
  std::size_t dimension = 0;
  std::size_t bound = 0;  // n + |IYB group|
  std::size_t simples_only_rank = 0;
  bool simples_span = false;
  std::optional<std::size_t> ball_rank;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

struct DimensionResult {
  DimensionReport report;
  std::vector<LabeledMatrix> spanning;
};

/// Builds the germ, coset tables and spanning set, extracts a basis and
/// compares against the rank of the images of all simples. Throws
/// InvariantViolation if dimension > n + |IYB| or the simples exceed it.
DimensionResult dimension_analysis(const Solution& s, GermOptions options = {});
DimensionReport dimension_report(const Solution& s, GermOptions options = {});

}  // namespace ybe
