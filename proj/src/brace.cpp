#include "ybe/brace.hpp"

#include <random>
#include <sstream>

namespace ybe {

namespace {

std::string show(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.vec.size(); ++i) os << (i ? "," : "") << g.vec[i];
  os << ')';
  return os.str();
}

}  // namespace

GroupElement BraceView::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.vec.size(); ++i) out.vec[i] += b.vec[i];
  return out;
}

GroupElement BraceView::subtract(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.vec.size(); ++i) out.vec[i] -= b.vec[i];
  return out;
}

GroupElement BraceView::negate(const GroupElement& a) const {
  return subtract(germ_->identity(), a);
}

GroupElement BraceView::lambda(const GroupElement& a, const GroupElement& b) const {
  return subtract(germ_->multiply(a, b), a);
}

GroupElement BraceView::lambda_inverse(const GroupElement& a, const GroupElement& b) const {
  return lambda(germ_->inverse(a), b);
}

bool BraceView::socle_contains(const GroupElement& a) const {
  return germ_->phi(a).is_identity();
}

BraceLawReport verify_brace_laws(const BraceView& brace, const std::vector<Triple>& triples) {
  const Germ& g = brace.germ();
  BraceLawReport report;
  for (const auto& [a, b, c] : triples) {
    ++report.triples_checked;
    std::string failed;

    const GroupElement lhs = g.multiply(a, brace.add(b, c));
    const GroupElement rhs = brace.subtract(brace.add(g.multiply(a, b), g.multiply(a, c)), a);
    if (lhs != rhs) failed = "a(b+c) != ab+ac-a";

    if (failed.empty() &&
        brace.lambda(g.multiply(a, b), c) != brace.lambda(a, brace.lambda(b, c))) {
      failed = "lambda_{ab}(c) != lambda_a(lambda_b(c))";
    }

    if (failed.empty() && g.multiply(a, brace.lambda_inverse(a, b)) !=
                              g.multiply(b, brace.lambda_inverse(b, a))) {
      failed = "a lambda_a^{-1}(b) != b lambda_b^{-1}(a)";
    }

    if (!failed.empty()) {
      report.passed = false;
      report.counterexample =
          failed + " at a=" + show(a) + " b=" + show(b) + " c=" + show(c);
      break;
    }
  }
  return report;
}

std::vector<Triple> brace_triples(const Germ& germ, const TripleSampling& sampling,
                                  bool* exhaustive) {
  const auto k = static_cast<std::uint64_t>(germ.size());
  std::vector<Triple> triples;
  const bool all = k <= 2'000'000 && k * k * k <= sampling.exhaustive_limit;
  if (exhaustive) *exhaustive = all;
  if (all) {
    triples.reserve(k * k * k);
    for (const auto& a : germ.simples()) {
      for (const auto& b : germ.simples()) {
        for (const auto& c : germ.simples()) {
          triples.push_back({GroupElement{a.residue}, GroupElement{b.residue},
                             GroupElement{c.residue}});
        }
      }
    }
    return triples;
  }

  std::mt19937_64 rng(sampling.seed);
  const auto m = static_cast<std::int64_t>(germ.class_m());
  const auto span = static_cast<std::uint64_t>(3 * m);
  auto draw = [&] {
    IntVec v(germ.rank());
    for (auto& c : v) c = static_cast<std::int64_t>(rng() % span) - m;
    return GroupElement{std::move(v)};
  };
  triples.reserve(sampling.samples);
  for (std::uint64_t i = 0; i < sampling.samples; ++i) {
    GroupElement a = draw();
    GroupElement b = draw();
    GroupElement c = draw();
    triples.push_back({std::move(a), std::move(b), std::move(c)});
  }
  return triples;
}

BraceLawReport check_brace_laws(const Germ& germ, const TripleSampling& sampling) {
  bool exhaustive = false;
  const auto triples = brace_triples(germ, sampling, &exhaustive);
  BraceLawReport report = verify_brace_laws(BraceView(germ), triples);
  report.exhaustive = exhaustive;
  report.seed = exhaustive ? 0 : sampling.seed;
  return report;
}

}  // namespace ybe
