#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ybe/errors.hpp"

using namespace ybe;
using ybe::testing::perm;

namespace {

// Small solutions for property checks: permutation solutions for every f
// in Sym_3 and Sym_4 plus the fixtures.
std::vector<Solution> corpus() {
  std::vector<Solution> out{testing::example15(), testing::p3(), testing::trivial(1),
                            testing::trivial(2), testing::trivial(3)};
  for (std::size_t n : {3u, 4u}) {
    std::vector<int> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<int>(i);
    do {
      out.push_back(testing::permutation_solution(Permutation(image)));
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("load_solution: worked example") {
  const Solution s = testing::example15();
  REQUIRE(s.size() == 4);
  CHECK(s.sigma(0) == perm({1, 2, 4, 3}));
  CHECK(s.sigma(1) == perm({4, 3, 1, 2}));
  CHECK(s.sigma(2) == perm({2, 1, 3, 4}));
  CHECK(s.sigma(3) == perm({3, 4, 2, 1}));

  // gamma derived from sigma alone agrees with the published gammas
  const Solution derived = Solution::from_sigma(s.sigmas());
  CHECK(derived.gamma(0) == Permutation::from_cycles(4, {{2, 3}}));
  CHECK(derived.gamma(1) == Permutation::from_cycles(4, {{2, 1, 3, 4}}));
  CHECK(derived.gamma(2) == Permutation::from_cycles(4, {{4, 1}}));
  CHECK(derived.gamma(3) == Permutation::from_cycles(4, {{4, 3, 1, 2}}));
  CHECK(derived == s);
}

TEST_CASE("load_solution: trivial") {
  const Solution s = testing::trivial(3);
  for (int y = 0; y < 3; ++y) CHECK(s.gamma(y).is_identity());
}

TEST_CASE("load_solution: errors") {
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1, 1], [1, 2]]})"), NotBijective);
  CHECK_THROWS_AS(load_solution("{not json"), ParseError);
  CHECK_THROWS_AS(load_solution("[1,2]"), ParseError);
  CHECK_THROWS_AS(load_solution(R"({"n": 0, "sigma": []})"), ParseError);
  CHECK_THROWS_AS(load_solution(R"({"n": 2})"), ParseError);
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1,2],[1,2]], "sigma_cycles": [[],[]]})"),
                  ParseError);
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1,2]]})"), ParseError);
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1,2],[1,2,3]]})"), ParseError);
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1,2],[1,"2"]]})"), ParseError);

  // sigma bijective but the derived gamma_1 is not
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1,2],[2,1]]})"), NotBijective);

  CHECK_THROWS_AS(load_solution(R"({"n": 3, "sigma": [[1,3,2],[1,3,2],[2,3,1]]})"), NotBraided);

  CHECK_THROWS_AS(load_solution(R"({"n": 4, "sigma_cycles": [[[3,4]],[[1,4,2,3]],[[2,1]],[[3,2,4,1]]],
                                   "gamma": [[1,2,3,4],[1,2,3,4],[1,2,3,4],[1,2,3,4]]})"),
                  GammaInconsistent);
  CHECK_THROWS_AS(load_solution(R"({"n": 2, "sigma": [[1,2],[1,2]], "gamma": [[2,1],[1,1]]})"),
                  NotBijective);
}

TEST_CASE("error message names the offending row") {
  try {
    load_solution(R"({"n": 2, "sigma": [[1,2],[2,2]]})");
    FAIL("expected NotBijective");
  } catch (const NotBijective& e) {
    CHECK(std::string(e.what()).find("sigma_2") != std::string::npos);
  }
}

TEST_CASE("apply_r") {
  const Solution s = testing::example15();
  CHECK(s.apply(0, 1) == std::pair{1, 2});  // x1x2 = x2x3
  CHECK(s.apply(0, 2) == std::pair{3, 3});  // x1x3 = x4x4
  const Solution t = testing::trivial(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(t.apply(x, y) == std::pair{y, x});
  CHECK_THROWS_AS(s.apply(4, 0), IndexOutOfRange);
  CHECK_THROWS_AS(s.apply(0, -1), IndexOutOfRange);
}

TEST_CASE("diagonal map") {
  CHECK(diagonal_map(testing::example15()) == perm({1, 4, 3, 2}));
  CHECK(diagonal_map(testing::trivial(3)).is_identity());
  CHECK(diagonal_map(testing::p3()) == perm({2, 3, 1}));
}

TEST_CASE("class, condition (C), frozen words") {
  const Solution e = testing::example15();
  const Solution p = testing::p3();
  const Solution t = testing::trivial(3);
  CHECK(class_of(e) == 2);
  CHECK(class_of(p) == 3);
  CHECK(class_of(t) == 1);
  CHECK(satisfies_condition_c(e));
  CHECK_FALSE(satisfies_condition_c(p));
  CHECK(satisfies_condition_c(t));

  using W = std::vector<std::vector<int>>;
  CHECK(frozen_words(e) == W{{0, 0}, {1, 3}, {2, 2}, {3, 1}});
  CHECK(frozen_words(p) == W{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(frozen_words(t) == W{{0}, {1}, {2}});

  CHECK_THROWS_AS(class_of(p, 2), ClassSearchExceeded);
}

TEST_CASE("retraction and multipermutation level") {
  const Retraction rp = retraction(testing::p3());
  CHECK(rp.quotient.size() == 1);
  CHECK(rp.class_map == std::vector<int>{0, 0, 0});
  CHECK(multipermutation_level(testing::p3()) == 1);

  const Retraction re = retraction(testing::example15());
  CHECK(re.quotient.size() == 4);
  CHECK(re.class_map == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(multipermutation_level(testing::example15()).has_value());

  CHECK(retraction(testing::trivial(3)).quotient.size() == 1);
  CHECK(multipermutation_level(testing::trivial(1)) == 0);
  CHECK(multipermutation_level(testing::trivial(3)) == 1);
}

TEST_CASE("retraction numbers classes by smallest member") {
  // sigma_1 = sigma_3 = (2,4) style permutation solution variant:
  // 2-level solution on 4 points with sigma classes {1,3}, {2}, {4}.
  const Solution s = Solution::from_sigma({perm({1, 2, 3, 4}), perm({3, 2, 1, 4}),
                                           perm({1, 2, 3, 4}), perm({3, 2, 1, 4})});
  const Retraction r = retraction(s);
  CHECK(r.class_map == std::vector<int>{0, 1, 0, 1});
  CHECK(r.quotient.size() == 2);
  CHECK(multipermutation_level(s) == 2);
  CHECK(retraction_levels(s) == std::vector<std::size_t>{4, 2, 1});
}

TEST_CASE("profile") {
  const SolutionProfile p = profile(testing::example15());
  CHECK(p.class_m == 2);
  CHECK(p.iyb_order == 8);
  CHECK(p.diagonal == perm({1, 4, 3, 2}));
  CHECK(p.condition_c);
  CHECK_FALSE(p.square_free);
  CHECK(p.retraction_sizes == std::vector<std::size_t>{4});
  CHECK_FALSE(p.multipermutation_level);
  for (std::size_t k = 0; k < p.frozen.size(); ++k) {
    REQUIRE(p.frozen[k].size() == 2);
    CHECK(p.frozen[k][0] == static_cast<int>(k));
  }
  CHECK(profile(testing::trivial(2)).square_free);
}

TEST_CASE("invariants over a corpus of solutions") {
  for (const Solution& s : corpus()) {
    CAPTURE(solution_to_json(s));
    const Permutation d = diagonal_map(s);
    for (int x = 0; x < static_cast<int>(s.size()); ++x) {
      CHECK(s.apply(x, d(x)) == std::pair{x, d(x)});
    }
    CHECK(diagonal_inverse_from_gamma(s) == d.inverse());

    const int m = class_of(s);
    for (const auto& w : frozen_words(s, m)) {
      Permutation prod = Permutation::identity(s.size());
      for (const int x : w) prod = prod * s.sigma(x);
      CHECK(prod.is_identity());
    }
    // minimality: every smaller m' fails for some x
    for (int smaller = 1; smaller < m; ++smaller) {
      bool all = true;
      for (const auto& w : frozen_words(s, smaller)) {
        Permutation prod = Permutation::identity(s.size());
        for (const int x : w) prod = prod * s.sigma(x);
        all = all && prod.is_identity();
      }
      CHECK_FALSE(all);
    }
    CHECK(satisfies_condition_c(s) == (m <= 2));

    bool fixed = true;
    for (int x = 0; x < static_cast<int>(s.size()); ++x) fixed = fixed && s.apply(x, x) == std::pair{x, x};
    CHECK(is_square_free(s) == fixed);

    // the quotient was validated on construction; sizes only shrink
    const auto sizes = retraction_levels(s);
    for (std::size_t i = 1; i < sizes.size(); ++i) CHECK(sizes[i] < sizes[i - 1]);
    CHECK(load_solution(solution_to_json(s)) == s);
  }
}

TEST_CASE("permutation solutions have class equal to the order of f") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<int> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<int>(i);
    std::shuffle(image.begin(), image.end(), rng);
    const Permutation f(image);
    int order = 1;
    for (Permutation p = f; !p.is_identity(); p = p * f) ++order;
    CHECK(class_of(testing::permutation_solution(f)) == order);
  }
}
