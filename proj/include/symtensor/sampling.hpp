#pragma once

// Random problem instances for the self-check command and the test suites.
// Only raw std::mt19937_64 output is consumed, so a seed reproduces the same
// instances on every platform.

#include <cstdint>
#include <random>
#include <string>

#include "symtensor/combinatorics.hpp"
#include "symtensor/exact_linalg.hpp"

namespace symtensor::sampling {

using Rng = std::mt19937_64;

/// Uniform in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// Small integers, occasionally halves and thirds.
Rational random_entry(Rng& rng);
VectorFamily random_family(Rng& rng, int n, int dim);
/// Families with repeated, parallel and zero vectors.
VectorFamily adversarial_family(Rng& rng, int n, int dim);
/// A filling of lambda chosen uniformly.
Tableau random_filling(Rng& rng, const Partition& lambda);

/// u with u_i = alpha_i v_i and prod alpha_i = `product`.
VectorFamily scaled_copy(Rng& rng, const VectorFamily& v, const Rational& product);

/// Picks a column system of lambda and replaces the vectors of every column
/// by an invertible recombination of themselves, the determinants of the
/// recombinations multiplying to `product`. Spans of that system's columns
/// are preserved.
VectorFamily per_column_change(Rng& rng, const VectorFamily& v, const Partition& lambda,
                               const Rational& product);

/// v with its vectors reordered.
VectorFamily shuffled(Rng& rng, const VectorFamily& v);

struct InstancePair {
  VectorFamily v;
  VectorFamily u;
  std::string kind;
};

/// Rotates through independent, engineered-equal and near-miss pairs by `slot`.
InstancePair random_pair(Rng& rng, const Partition& lambda, int dim, int slot);

}  // namespace symtensor::sampling
