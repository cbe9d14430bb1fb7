#include "symtensor/selfcheck.hpp"

#include <algorithm>
#include <map>

#include "symtensor/characters.hpp"
#include "symtensor/decision.hpp"
#include "symtensor/group_algebra.hpp"
#include "symtensor/sampling.hpp"
#include "symtensor/tensor.hpp"

namespace symtensor {

bool SelfcheckReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
}

namespace {

// Full-sum properties over all fillings get expensive quickly.
constexpr int kFillingSumMaxN = 5;

void record(PropertyResult& p, bool ok) {
  ++p.checked;
  if (!ok) ++p.failures;
}

}  // namespace

SelfcheckReport run_selfcheck(int n, int trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("selfcheck: n must be positive");
  if (trials < 0) throw std::invalid_argument("selfcheck: trials must be nonnegative");
  check_size_limit(n, "selfcheck");

  SelfcheckReport report{n, trials, seed, {}};
  sampling::Rng rng(seed);
  const std::vector<Partition> shapes = enumerate_partitions(n);

  std::map<Partition, GroupAlgebraElement> projectors;
  for (const Partition& lambda : shapes) projectors.emplace(lambda, isotypic_projector(lambda));

  PropertyResult characters{"character_table_agreement"};
  record(characters, character_table(n) == character_table_oracle(n));

  PropertyResult resolution{"projector_resolution"};
  if (n <= kFillingSumMaxN) {
    GroupAlgebraElement total(n);
    for (const auto& [lambda, p] : projectors) {
      record(resolution, ga_multiply(p, p) == p);
      total += p;
    }
    record(resolution, total == GroupAlgebraElement::identity(n));
  }

  PropertyResult gamas{"gamas_equivalence"};
  PropertyResult standard{"gamas_standard_agreement"};
  PropertyResult equality{"equality_decider_agreement"};
  PropertyResult vanishing{"young_symmetrizer_vanishing"};
  PropertyResult reduction{"symmetrizer_reduction"};

  for (int trial = 0; trial < trials; ++trial) {
    const Partition& lambda = shapes[static_cast<std::size_t>(
        sampling::uniform_int(rng, 0, static_cast<int>(shapes.size()) - 1))];
    const int dim = sampling::uniform_int(rng, 2, 3);
    const GroupAlgebraElement& projector = projectors.at(lambda);

    const VectorFamily family = (trial % 2 == 0) ? sampling::random_family(rng, n, dim)
                                                 : sampling::adversarial_family(rng, n, dim);
    const SparseTensor x = decomposable(family);
    const bool nonzero = !apply_element(x, projector).is_zero();
    const GamasResult g = gamas_nonvanishing(family, lambda);
    record(gamas, g.nonzero == nonzero);
    record(standard, gamas_standard(family, lambda).nonzero == g.nonzero);

    const Tableau t = sampling::random_filling(rng, lambda);
    const bool c_zero = apply_element(x, young_symmetrizer(t)).is_zero();
    const bool b_zero = apply_element(x, column_antisymmetrizer(t)).is_zero();
    const bool dependent = !columns_independent(family, column_system_of(t));
    record(vanishing, c_zero == b_zero && b_zero == dependent);

    const sampling::InstancePair pair = sampling::random_pair(rng, lambda, dim, trial);
    const SparseTensor sv = apply_element(decomposable(pair.v), projector);
    const SparseTensor su = apply_element(decomposable(pair.u), projector);
    const bool equal = tensor_equal(sv, su);
    record(equality, decide_equality(pair.v, pair.u, lambda).equal == equal);

    if (n <= kFillingSumMaxN) {
      const SparseTensor xv = decomposable(pair.v);
      const SparseTensor xu = decomposable(pair.u);
      bool all_fillings = true;
      for_each_filling(lambda, [&](const Tableau& filling) {
        if (!all_fillings) return;
        const GroupAlgebraElement c = young_symmetrizer(filling);
        all_fillings = apply_element(xv, c) == apply_element(xu, c);
      });
      record(reduction, all_fillings == equal);
    }
  }

  report.properties = {characters, resolution, gamas, standard, vanishing, equality, reduction};
  return report;
}

}  // namespace symtensor
