#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/group.hpp"

namespace ybe {

/// The left brace on G(X, r): multiplication is the group product, addition
/// is addition of pi-vectors.
class BraceView {
 public:
  explicit BraceView(const Germ& germ) : germ_(&germ) {}

  const Germ& germ() const { return *germ_; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;

  /// lambda_a(b) = a*b - a.
  GroupElement lambda(const GroupElement& a, const GroupElement& b) const;
  GroupElement lambda_inverse(const GroupElement& a, const GroupElement& b) const;

  /// lambda_a = id, i.e. phi(a) = id.
  bool socle_contains(const GroupElement& a) const;

 private:
  const Germ* germ_;
};

using Triple = std::array<GroupElement, 3>;

struct BraceLawReport {
  std::size_t triples_checked = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;  // meaningful when !exhaustive
  bool passed = true;
  std::optional<std::string> counterexample;
};

/// Checks on every triple (a, b, c):
///   a(b + c) = ab + ac - a
///   lambda_{ab}(c) = lambda_a(lambda_b(c))
///   a lambda_a^{-1}(b) = b lambda_b^{-1}(a)
/// and stops at the first failure.
BraceLawReport verify_brace_laws(const BraceView& brace, const std::vector<Triple>& triples);

struct TripleSampling {
  std::uint64_t exhaustive_limit = 10'000;  // all simple triples if (m^n)^3 fits
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0x7B1;
};

/// All triples of simples when there are at most `exhaustive_limit` of
/// them, else `samples` triples of elements with coordinates drawn from
/// [-m, 2m) by a seeded mt19937_64.
std::vector<Triple> brace_triples(const Germ& germ, const TripleSampling& sampling,
                                  bool* exhaustive = nullptr);

BraceLawReport check_brace_laws(const Germ& germ, const TripleSampling& sampling = {});

}  // namespace ybe
