#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sortlab/rng.hpp"

namespace sortlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every fast path against its brute-force oracle and every structural
/// invariant: exhaustively on small n, on seeded random permutations beyond.
/// Takes a few seconds.
std::vector<CheckResult> run_verification(Seed seed);

}  // namespace sortlab
