#pragma once

#include <string>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe::testing {

inline Solution fixture(const std::string& name) {
  return load_solution_file(std::string(YBE_FIXTURES) + "/" + name + ".json");
}

inline Solution example15() { return fixture("example15"); }
inline Solution p3() { return fixture("p3"); }
inline Solution trivial(int n) { return fixture("trivial" + std::to_string(n)); }

inline Permutation perm(std::vector<int> one_based) { return Permutation::from_one_line(one_based); }

// 1-based letters -> 0-based
inline std::vector<int> word(std::vector<int> one_based) {
  for (int& x : one_based) --x;
  return one_based;
}

// Permutation solution: every sigma_x is the same f.
inline Solution permutation_solution(const Permutation& f) {
  return Solution::from_sigma(std::vector<Permutation>(f.size(), f));
}

}  // namespace ybe::testing
