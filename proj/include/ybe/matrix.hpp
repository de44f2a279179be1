#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ybe {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(std::int64_t k, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals (always in lowest terms).
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// One row per input matrix, each flattened row-major.
  static RationalMatrix stack_flattened(std::span<const IntMatrix> mats);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Gaussian elimination with the first nonzero pivot in each column.
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Row-echelon basis grown one vector at a time.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces `v` against the basis; keeps it and returns true iff it is
  /// independent of what was added before.
  bool add(std::span<const std::int64_t> v);
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

struct RankBasis {
  std::size_t rank = 0;
  std::vector<std::size_t> kept;  // input positions that raised the rank
};

/// Greedy scan in input order over the flattened matrices. Throws
/// ShapeMismatch if the shapes differ.
RankBasis rank_and_basis(std::span<const IntMatrix> mats);

}  // namespace ybe
