#pragma once

// Self-verification suites: every cross-check the library promises
// (Euler-characteristic consistency, Serre duality, the extension and
// moduli dimension laws, determinant-oracle agreement, the twist rank-zero
// law and the block-dimension counting identity), run over grids scaled by
// a single size parameter. Grid size 4 reproduces the reference grids.

#include <string>
#include <vector>

namespace wzw {

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> counterexamples;  // at most the first 10
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const auto& suite : suites) {
      if (suite.failures != 0) return false;
    }
    return true;
  }
};

// Runs every suite. grid must be >= 1; even the minimal grid exercises
// each suite on a nonempty case set.
VerifyReport run_selfcheck(int grid);

}  // namespace wzw
