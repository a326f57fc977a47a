#pragma once

#include <string>
#include <vector>

#include "springer2/orbit.hpp"

namespace springer2 {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Criteria 1-10 over the given cases for 0 <= n <= max_n (branching from n = 1).
std::vector<CriterionResult> run_suite(const std::vector<LieCase>& cases, int max_n);

/// Symbols of every similarity class in the case space at rank n: one
/// distinguished member each, and the interval action free and transitive.
std::vector<std::string> check_similarity_classes(LieCase c, int n);
/// Distinct branching multisets for distinct characters (degenerate
/// unordered classes excluded).
std::vector<std::string> check_injectivity(LieCase c, int n);
/// Spaces that must be empty: X^{n+1,n+1}_{n,d} and X^{2,n+1}_{n,d} for odd
/// d != 1, Y^{n+1}_{n,d} for even d > 0 and odd |d| >= 3.
std::vector<std::string> check_emptiness(int n);

}  // namespace springer2
