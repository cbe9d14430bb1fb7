#include "symtensor/decision.hpp"

#include <functional>
#include <stdexcept>

namespace symtensor {

namespace {

void require_family_size(const VectorFamily& family, const Partition& lambda) {
  if (family.size() != lambda.size())
    throw std::invalid_argument("family size does not match |lambda|");
}

}  // namespace

bool columns_independent(const VectorFamily& family, const ColumnSystem& system) {
  require_family_size(family, system.shape());
  for (const auto& col : system.columns())
    if (!is_independent(family, col)) return false;
  return true;
}

GamasResult gamas_nonvanishing(const VectorFamily& family, const Partition& lambda) {
  require_family_size(family, lambda);
  for (const ColumnSystem& system : enumerate_column_systems(lambda))
    if (columns_independent(family, system)) return {true, system};
  return {};
}

StandardGamasResult gamas_standard(const VectorFamily& family, const Partition& lambda) {
  require_family_size(family, lambda);
  for (const Tableau& t : enumerate_standard(lambda))
    if (columns_independent(family, column_system_of(t))) return {true, t};
  return {};
}

std::string_view to_string(VerdictMode mode) {
  switch (mode) {
    case VerdictMode::both_vanish: return "both_vanish";
    case VerdictMode::witnessed: return "witnessed";
    case VerdictMode::failed: return "failed";
  }
  return "?";
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::independence_mismatch: return "independence_mismatch";
    case FailureReason::no_span_matching: return "no_span_matching";
    case FailureReason::product_not_one: return "product_not_one";
  }
  return "?";
}

SystemCheck check_system(const VectorFamily& v, const VectorFamily& u, const ColumnSystem& system) {
  SystemCheck check;
  const bool v_indep = columns_independent(v, system);
  const bool u_indep = columns_independent(u, system);
  if (!v_indep && !u_indep) {
    check.vanishes = true;
    check.passed = true;
    return check;
  }
  if (v_indep != u_indep) {
    check.reason = FailureReason::independence_mismatch;
    return check;
  }

  const auto& cols = system.columns();
  const std::size_t m = cols.size();
  // scalar[j][k] is set iff v-column j and u-column k span the same subspace.
  std::vector<std::vector<std::optional<Rational>>> scalar(m, std::vector<std::optional<Rational>>(m));
  for (std::size_t j = 0; j < m; ++j) {
    bool any = false;
    for (std::size_t k = 0; k < m; ++k) {
      if (cols[j].size() != cols[k].size() || !span_equal(v, cols[j], u, cols[k])) continue;
      scalar[j][k] = transition_scalar(v, cols[j], u, cols[k]);
      any = true;
    }
    if (!any) {
      check.reason = FailureReason::no_span_matching;
      return check;
    }
  }

  // Any matching with product exactly 1 will do.
  std::vector<int> targets(m);
  std::vector<bool> used(m, false);
  std::optional<ColumnMatching> first;
  std::function<bool(std::size_t)> search = [&](std::size_t j) -> bool {
    if (j == m) {
      ColumnMatching matching;
      matching.targets = targets;
      matching.product = 1;
      for (std::size_t c = 0; c < m; ++c) {
        const Rational& s = *scalar[c][static_cast<std::size_t>(targets[c] - 1)];
        matching.scalars.push_back(s);
        matching.product *= s;
      }
      const bool accepted = matching.product == 1;
      if (accepted || !first) first = std::move(matching);
      return accepted;
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k] || !scalar[j][k]) continue;
      used[k] = true;
      targets[j] = static_cast<int>(k + 1);
      const bool found = search(j + 1);
      used[k] = false;
      if (found) return true;
    }
    return false;
  };

  const bool found = search(0);
  check.matching = std::move(first);
  if (found) {
    check.passed = true;
  } else {
    check.reason = check.matching ? FailureReason::product_not_one : FailureReason::no_span_matching;
  }
  return check;
}

EqualityVerdict decide_equality(const VectorFamily& v, const VectorFamily& u, const Partition& lambda,
                                const DecideOptions& options) {
  require_family_size(v, lambda);
  require_family_size(u, lambda);
  if (v.dim() != u.dim()) throw std::invalid_argument("decide_equality: ambient dimension mismatch");

  EqualityVerdict verdict;
  bool any_independent = false;
  for (const ColumnSystem& system : enumerate_column_systems(lambda)) {
    SystemCheck check = check_system(v, u, system);
    if (check.vanishes) continue;
    any_independent = true;
    if (check.passed) {
      verdict.witnesses.push_back({system, std::move(*check.matching)});
      continue;
    }
    verdict.failures.push_back({system, check.reason, std::move(check.matching)});
    if (!options.exhaustive_failures) break;
  }

  verdict.equal = verdict.failures.empty();
  if (!verdict.equal) {
    verdict.mode = VerdictMode::failed;
  } else {
    verdict.mode = any_independent ? VerdictMode::witnessed : VerdictMode::both_vanish;
  }
  return verdict;
}

}  // namespace symtensor
