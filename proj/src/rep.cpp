#include "ybe/rep.hpp"

#include "ybe/errors.hpp"

namespace ybe {

AffineMatrix::AffineMatrix(const Permutation& p, const IntVec& translation)
    : m_(p.size() + 1, p.size() + 1) {
  const std::size_t n = p.size();
  for (std::size_t j = 0; j < n; ++j) m_(static_cast<std::size_t>(p(static_cast<int>(j))), j) = 1;
  for (std::size_t i = 0; i < n; ++i) m_(i, n) = translation[i];
  m_(n, n) = 1;
}

AffineMatrix AffineMatrix::from_matrix(IntMatrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvariantViolation("affine matrix must be square");
  }
  const std::size_t n = m.rows() - 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(n, j) != 0) throw InvariantViolation("bottom row must be (0,...,0,1)");
  }
  if (m(n, n) != 1) throw InvariantViolation("bottom row must be (0,...,0,1)");
  for (std::size_t i = 0; i < n; ++i) {
    int row_ones = 0;
    int col_ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) throw InvariantViolation("block entries must be 0/1");
      if (m(j, i) != 0 && m(j, i) != 1) throw InvariantViolation("block entries must be 0/1");
      row_ones += static_cast<int>(m(i, j));
      col_ones += static_cast<int>(m(j, i));
    }
    if (row_ones != 1 || col_ones != 1) {
      throw InvariantViolation("upper block is not a permutation matrix");
    }
  }
  return AffineMatrix(std::move(m));
}

Permutation AffineMatrix::permutation() const {
  const std::size_t k = n();
  std::vector<int> image(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (m_(i, j) == 1) image[j] = static_cast<int>(i);
    }
  }
  return Permutation(std::move(image));
}

IntVec AffineMatrix::translation() const {
  IntVec t(n());
  for (std::size_t i = 0; i < n(); ++i) t[i] = m_(i, n());
  return t;
}

AffineMatrix operator*(const AffineMatrix& a, const AffineMatrix& b) {
  return AffineMatrix(a.m_ * b.m_);
}

AffineMatrix psi(const Germ& g, const GroupElement& e) {
  return AffineMatrix(g.phi(e), e.vec);
}

IntMatrix e_matrix(std::size_t n, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= n) {
    throw IndexOutOfRange("E_k needs 1 <= k <= " + std::to_string(n) + ", got " +
                          std::to_string(k + 1));
  }
  IntMatrix out(n + 1, n + 1);
  out(static_cast<std::size_t>(k), n) = 1;
  return out;
}

Decomposition decompose(const Germ& g, const GroupElement& e) {
  const Simple& s = g.simple_at_residue(e.vec);
  const auto m = static_cast<std::int64_t>(g.class_m());
  Decomposition d{GroupElement{s.residue}, IntVec(g.rank())};
  for (std::size_t i = 0; i < g.rank(); ++i) d.alpha[i] = (e.vec[i] - s.residue[i]) / m;

  IntMatrix rebuilt = psi(g, d.simple).matrix();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (d.alpha[i] != 0) rebuilt = rebuilt + (m * d.alpha[i]) * e_matrix(g.rank(), static_cast<int>(i));
  }
  if (rebuilt != psi(g, e).matrix()) {
    throw InvariantViolation("psi(g) != psi(s) + m sum alpha_i E_i");
  }
  return d;
}

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const int x : word) out += "x" + std::to_string(x + 1);
  return out;
}

std::vector<LabeledMatrix> spanning_set(const Germ& g, const CosetTables& c) {
  std::vector<LabeledMatrix> out;
  const auto words = frozen_words(g.solution(), g.class_m());
  for (std::size_t k = 0; k < words.size(); ++k) {
    GroupElement theta = g.from_word(words[k]);
    out.push_back({"theta_" + std::to_string(k + 1) + " = " + word_label(words[k]), theta,
                   words[k], psi(g, theta)});
  }
  for (const auto& v : c.kernel_cosets) {
    const auto& word = g.simple_at_residue(v.vec).witness;
    out.push_back({word_label(word), v, word, psi(g, v)});
  }
  return out;
}

DimensionResult dimension_analysis(const Solution& s, GermOptions options) {
  const Germ germ = Germ::build(s, options);
  const CosetTables cosets = coset_tables(germ);

  DimensionResult result;
  result.spanning = spanning_set(germ, cosets);
  DimensionReport& r = result.report;
  r.n = germ.rank();
  r.class_m = germ.class_m();
  r.iyb_order = cosets.iyb_order;
  r.bound = r.n + r.iyb_order;

  std::vector<IntMatrix> mats;
  mats.reserve(result.spanning.size());
  for (const auto& lm : result.spanning) {
    r.spanning_labels.push_back(lm.label);
    mats.push_back(lm.matrix.matrix());
  }
  const RankBasis rb = rank_and_basis(mats);
  r.dimension = rb.rank;
  r.basis_indices = rb.kept;
  for (const auto i : rb.kept) r.basis_labels.push_back(r.spanning_labels[i]);

  std::vector<IntMatrix> simple_mats;
  simple_mats.reserve(germ.size());
  for (const auto& sm : germ.simples()) simple_mats.push_back(psi(germ, {sm.residue}).matrix());
  r.simples_only_rank = rank_and_basis(simple_mats).rank;
  r.simples_span = r.simples_only_rank == r.dimension;

  if (r.dimension > r.bound) {
    throw InvariantViolation("dimension " + std::to_string(r.dimension) + " exceeds n + |G| = " +
                             std::to_string(r.bound));
  }
  if (r.simples_only_rank > r.dimension) {
    throw InvariantViolation("simples span " + std::to_string(r.simples_only_rank) +
                             " dimensions, more than the spanning set's " +
                             std::to_string(r.dimension));
  }
  return result;
}

DimensionReport dimension_report(const Solution& s, GermOptions options) {
  return dimension_analysis(s, options).report;
}

}  // namespace ybe
