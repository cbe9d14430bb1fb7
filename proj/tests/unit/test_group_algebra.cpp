#include <doctest.h>

#include "symtensor/characters.hpp"
#include "symtensor/group_algebra.hpp"

using namespace symtensor;

namespace {

using Elem = GroupAlgebraElement;

Elem e(int n, std::vector<std::vector<int>> cycles, const Rational& c = 1) {
  return Elem::basis(Permutation::from_cycles(n, cycles), c);
}

}  // namespace

TEST_CASE("ga_multiply basics") {
  const Elem one = Elem::identity(2);
  const Elem minus = one - e(2, {{1, 2}});
  const Elem plus = one + e(2, {{1, 2}});

  CHECK((minus * plus).is_zero());
  CHECK(minus * one == minus);
  CHECK(one * minus == minus);
  CHECK(minus * minus == Rational(2) * minus);

  CHECK_THROWS_AS(ga_multiply(one, Elem::identity(3)), std::invalid_argument);
}

TEST_CASE("canonical form drops cancelled terms") {
  Elem x = e(3, {{1, 2}}) - e(3, {{1, 2}});
  CHECK(x.is_zero());
  CHECK(x.term_count() == 0);
  x.add_term(Permutation::identity(3), 0);
  CHECK(x.is_zero());
}

TEST_CASE("ga_multiply is associative and distributive, exhaustive over basis triples for n = 3") {
  const auto all = enumerate_permutations(3);
  for (const auto& s : all)
    for (const auto& t : all) {
      const Elem x = Elem::basis(s, 2) + Elem::basis(t, ratio(-1, 3));
      const Elem y = Elem::basis(t) - Elem::basis(s, 5);
      const Elem z = Elem::basis(compose(s, t), ratio(1, 2)) + Elem::identity(3);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
    }
}

TEST_CASE("row symmetrizer and column antisymmetrizer of the worked example") {
  const Tableau t({{2, 3, 4}, {1, 5}});
  const Elem row234 = Elem::identity(5) + e(5, {{2, 3}}) + e(5, {{2, 4}}) + e(5, {{3, 4}}) +
                      e(5, {{2, 3, 4}}) + e(5, {{2, 4, 3}});
  const Elem row15 = Elem::identity(5) + e(5, {{1, 5}});
  CHECK(row_symmetrizer(t) == row234 * row15);
  CHECK(row_symmetrizer(t).term_count() == 12);

  const Elem b = (Elem::identity(5) - e(5, {{1, 2}})) * (Elem::identity(5) - e(5, {{3, 5}}));
  CHECK(column_antisymmetrizer(t) == b);
  CHECK(column_antisymmetrizer(t).term_count() == 4);
}

TEST_CASE("symmetrizers of one-row and one-column tableaux") {
  const Tableau column({{1}, {2}});
  const Tableau row({{1, 2}});
  CHECK(row_symmetrizer(column) == Elem::identity(2));
  CHECK(column_antisymmetrizer(row) == Elem::identity(2));
  CHECK(row_symmetrizer(row) == Elem::identity(2) + e(2, {{1, 2}}));
  CHECK(column_antisymmetrizer(column) == Elem::identity(2) - e(2, {{1, 2}}));
  CHECK(young_symmetrizer(column) == Elem::identity(2) - e(2, {{1, 2}}));
  CHECK(young_symmetrizer(row) == Elem::identity(2) + e(2, {{1, 2}}));
}

TEST_CASE("young symmetrizer of rows (1,2),(3)") {
  // b = 1 - (13), a = 1 + (12); the cross term is (13)(12) with
  // (13)(12)(i) = (13)((12)(i)), i.e. 1->2->2, 2->1->3, 3->3->1: the cycle (1 2 3).
  const Tableau t({{1, 2}, {3}});
  const Permutation cross = compose(Permutation::from_cycles(3, {{1, 3}}), Permutation::from_cycles(3, {{1, 2}}));
  CHECK(cross.images() == std::vector<int>{2, 3, 1});
  const Elem expected = Elem::identity(3) + e(3, {{1, 2}}) - e(3, {{1, 3}}) - e(3, {{1, 2, 3}});
  CHECK(young_symmetrizer(t) == expected);
}

TEST_CASE("isotypic projectors of small shapes") {
  const Rational half = ratio(1, 2);
  CHECK(isotypic_projector(Partition({2})) == half * (Elem::identity(2) + e(2, {{1, 2}})));
  CHECK(isotypic_projector(Partition({1, 1})) == half * (Elem::identity(2) - e(2, {{1, 2}})));
  CHECK(isotypic_projector(Partition({2, 1})) ==
        ratio(1, 3) * (Rational(2) * Elem::identity(3) - e(3, {{1, 2, 3}}) - e(3, {{1, 3, 2}})));
}

TEST_CASE("sum of young symmetrizers over fillings") {
  CHECK(sum_young_symmetrizers(Partition({2})) == Rational(4) * isotypic_projector(Partition({2})));
  CHECK(sum_young_symmetrizers(Partition({1, 1})) == Rational(4) * isotypic_projector(Partition({1, 1})));
  const auto k = scalar_ratio(sum_young_symmetrizers(Partition({2, 1})), isotypic_projector(Partition({2, 1})));
  REQUIRE(k);
  CHECK(*k != 0);
}

TEST_CASE("projectors are central orthogonal idempotents resolving the identity, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto shapes = enumerate_partitions(n);
    std::vector<Elem> projectors;
    for (const auto& lambda : shapes) projectors.push_back(isotypic_projector(lambda));

    Elem total(n);
    for (std::size_t a = 0; a < shapes.size(); ++a) {
      total += projectors[a];
      for (std::size_t b = 0; b < shapes.size(); ++b) {
        const Elem prod = projectors[a] * projectors[b];
        if (a == b) CHECK(prod == projectors[a]);
        else CHECK(prod.is_zero());
      }
      for (const auto& sigma : enumerate_permutations(n)) {
        const Elem s = Elem::basis(sigma);
        CHECK(projectors[a] * s == s * projectors[a]);
      }
    }
    CHECK(total == Elem::identity(n));
  }
}

TEST_CASE("young symmetrizers: T c_T = c_T, c_T^2 = (n!/dim) c_T, sum is a multiple of T, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      const Elem projector = isotypic_projector(lambda);
      const Rational kappa = ratio(static_cast<long>(factorial(n)), static_cast<long>(hook_length_dimension(lambda)));
      for (const auto& t : enumerate_fillings(lambda)) {
        const Elem c = young_symmetrizer(t);
        CHECK(projector * c == c);
        CHECK(c * c == kappa * c);
      }
      const auto k = scalar_ratio(sum_young_symmetrizers(lambda), projector);
      REQUIRE(k);
      CHECK(*k != 0);
    }
}

TEST_CASE("scalar_ratio") {
  const Elem x = Elem::identity(2) + e(2, {{1, 2}});
  CHECK(scalar_ratio(Rational(3) * x, x) == std::optional<Rational>(3));
  CHECK_FALSE(scalar_ratio(Elem::identity(2), x));
  CHECK_THROWS_AS(scalar_ratio(x, Elem(2)), std::invalid_argument);
}
