#pragma once

// Combinatorial deciders for vanishing and equality of symmetrized
// decomposable tensors v^{(x)} T_lambda.
//
// Every check runs over column systems (the multiset of column sets of a
// tableau) rather than over all n! fillings: the nonvanishing of v c_T and the
// wedge data of its columns only depend on which vectors share a column.

#include <optional>
#include <string_view>
#include <vector>

#include "symtensor/combinatorics.hpp"
#include "symtensor/exact_linalg.hpp"

namespace symtensor {

/// Every column of `system` indexes an independent subset of `family`.
bool columns_independent(const VectorFamily& family, const ColumnSystem& system);

struct GamasResult {
  bool nonzero = false;
  std::optional<ColumnSystem> witness;
};

struct StandardGamasResult {
  bool nonzero = false;
  std::optional<Tableau> witness;
};

GamasResult gamas_nonvanishing(const VectorFamily& family, const Partition& lambda);
StandardGamasResult gamas_standard(const VectorFamily& family, const Partition& lambda);

enum class VerdictMode { both_vanish, witnessed, failed };
enum class FailureReason { independence_mismatch, no_span_matching, product_not_one };

std::string_view to_string(VerdictMode mode);
std::string_view to_string(FailureReason reason);

/// A pairing of v-columns with u-columns of equal span.
struct ColumnMatching {
  /// targets[j] is the 1-based u-column matched with v-column j+1.
  std::vector<int> targets;
  /// scalars[j]: wedge of v over column j equals scalars[j] times wedge of u
  /// over column targets[j]; both read in increasing order.
  std::vector<Rational> scalars;
  Rational product;
};

struct SystemWitness {
  ColumnSystem system;
  ColumnMatching matching;
};

struct SystemFailure {
  ColumnSystem system;
  FailureReason reason;
  /// For product_not_one, the first matching tried.
  std::optional<ColumnMatching> attempt;
};

struct EqualityVerdict {
  bool equal = true;
  VerdictMode mode = VerdictMode::both_vanish;
  std::vector<SystemFailure> failures;
  /// One entry per v-independent system that passed.
  std::vector<SystemWitness> witnesses;
};

struct DecideOptions {
  /// Keep going after the first failing system.
  bool exhaustive_failures = false;
};

/// Decides v^{(x)} T_lambda == u^{(x)} T_lambda from the column conditions.
/// Throws std::invalid_argument on size or dimension mismatch and
/// SizeLimitError past the configured limit.
EqualityVerdict decide_equality(const VectorFamily& v, const VectorFamily& u, const Partition& lambda,
                                const DecideOptions& options = {});

/// Outcome of the column conditions on one system.
struct SystemCheck {
  /// Columns dependent for both families: both v c_T and u c_T vanish.
  bool vanishes = false;
  bool passed = false;
  FailureReason reason = FailureReason::independence_mismatch;
  /// The accepted matching when passed; the first matching tried when the
  /// product test failed.
  std::optional<ColumnMatching> matching;
};

SystemCheck check_system(const VectorFamily& v, const VectorFamily& u, const ColumnSystem& system);

}  // namespace symtensor
