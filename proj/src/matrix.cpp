#include "ybe/matrix.hpp"

#include <sstream>
#include <utility>

#include "ybe/errors.hpp"

namespace ybe {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product of incompatible shapes");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum of different shapes");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  return a + (-1) * b;
}

IntMatrix operator*(std::int64_t k, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& x : out.data_) x *= k;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

RationalMatrix RationalMatrix::stack_flattened(std::span<const IntMatrix> mats) {
  const std::size_t width = mats.empty() ? 0 : mats.front().data().size();
  RationalMatrix out(mats.size(), width);
  for (std::size_t r = 0; r < mats.size(); ++r) {
    if (mats[r].data().size() != width) throw ShapeMismatch("matrices of different shapes");
    for (std::size_t c = 0; c < width; ++c) out(r, c) = mats[r].data()[c];
  }
  return out;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a(rank, j), a(pivot, j));
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(rank, col);
      for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool IncrementalBasis::add(std::span<const std::int64_t> v) {
  if (v.size() != dim_) throw ShapeMismatch("vector length differs from basis dimension");
  if (full()) return false;
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j) {
      if (row[j] != 0) w[j] -= f * row[j];
    }
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const Rational lead = w[pivot];
  for (std::size_t j = pivot; j < dim_; ++j) w[j] /= lead;
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

RankBasis rank_and_basis(std::span<const IntMatrix> mats) {
  RankBasis out;
  if (mats.empty()) return out;
  const std::size_t rows = mats.front().rows();
  const std::size_t cols = mats.front().cols();
  IncrementalBasis basis(rows * cols);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mats[i].rows() != rows || mats[i].cols() != cols) {
      throw ShapeMismatch("matrix " + std::to_string(i) + " is " +
                          std::to_string(mats[i].rows()) + "x" + std::to_string(mats[i].cols()) +
                          ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (basis.add(mats[i].data())) out.kept.push_back(i);
  }
  out.rank = basis.rank();
  return out;
}

}  // namespace ybe
