#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ybe {

/// A bijection of {0, ..., n-1}, stored in one-line form.
///
/// Composition follows the function convention: (f * g)(i) = f(g(i)),
/// so the right factor acts first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws NotBijective unless `image` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(std::size_t n);

  /// 1-based one-line form, as it appears in solution files.
  static Permutation from_one_line(std::span<const int> one_based);

  /// 1-based disjoint (or not) cycles, applied right to left like a
  /// product of cycles. Points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<int>>& cycles);

  std::size_t size() const { return image_.size(); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  std::vector<int> one_line() const;  // 1-based
  std::string to_string() const;      // "[1,4,3,2]"
  std::string cycle_string() const;   // "(2,4)" or "()"

  friend Permutation operator*(const Permutation& f, const Permutation& g);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Closure of `generators` under composition: the generated subgroup of
/// Sym_n, sorted. `n` is only used when `generators` is empty.
std::vector<Permutation> generated_group(std::span<const Permutation> generators,
                                         std::size_t n);

}  // namespace ybe
