#pragma once

// Randomized cross-validation of the combinatorial deciders against the
// brute-force tensor computation, plus the algebraic invariants they rest on.

#include <cstdint>
#include <string>
#include <vector>

namespace symtensor {

struct PropertyResult {
  std::string name;
  int checked = 0;
  int failures = 0;
  bool passed() const { return failures == 0; }
};

struct SelfcheckReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool all_passed() const;
};

/// Runs every property on random instances of degree n. Throws
/// SizeLimitError if n exceeds the size limit.
SelfcheckReport run_selfcheck(int n, int trials, std::uint64_t seed);

}  // namespace symtensor
