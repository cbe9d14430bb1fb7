#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symtensor/exact_linalg.hpp"
#include "symtensor/sampling.hpp"

using namespace symtensor;

namespace {

VectorFamily family(int dim, std::vector<std::vector<long>> vs) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : vs) {
    std::vector<Rational> row;
    for (long x : v) row.emplace_back(x);
    out.push_back(row);
  }
  return VectorFamily(dim, out);
}

Matrix ints(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return Matrix::from_rows(r);
}

using Idx = std::vector<int>;

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == ratio(-2, 3));
  CHECK(format_rational(parse_rational("-4/6")) == "-2/3");
  CHECK(format_rational(parse_rational("10/5")) == "2");
  CHECK(format_rational(parse_rational("-0")) == "0");
  CHECK(format_rational(ratio(6, -4)) == "-3/2");

  for (const char* bad : {"", "-", "1/", "/2", "1/0", " 1", "1 ", "+1", "1.5", "1/-2", "--1", "a"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Rational x = ratio(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 50) + 1);
    CHECK(parse_rational(format_rational(x)) == x);
  }
}

TEST_CASE("rank") {
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(3)) == 1);
  CHECK(determinant(ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
  CHECK(determinant(ints({{2, 0}, {1, 1}})) == 2);
  CHECK(determinant(Matrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), std::invalid_argument);

  sampling::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(sampling::uniform_int(rng, 1, 4));
    Matrix a(k, k), b(k, k);
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        a(i, j) = rows[i][j] = sampling::random_entry(rng);
        b(i, j) = sampling::random_entry(rng);
      }
    CHECK(determinant(a) == oracle::leibniz_det(rows));
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("is_independent") {
  const auto f = family(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(is_independent(f, Idx{}));
  CHECK(!is_independent(family(2, {{1, 0}, {1, 0}}), Idx{1, 2}));
  CHECK(is_independent(f, Idx{1, 3}));
  CHECK(!is_independent(f, Idx{1, 2, 3}));
  CHECK(!is_independent(family(2, {{0, 0}}), Idx{1}));
  CHECK_THROWS_AS(is_independent(f, Idx{4}), std::invalid_argument);
}

TEST_CASE("independence agrees with a nonzero maximal minor, |S| <= 3") {
  sampling::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = sampling::uniform_int(rng, 1, 4);
    const VectorFamily f = trial % 2 ? sampling::random_family(rng, 3, dim) : sampling::adversarial_family(rng, 3, dim);
    Idx s;
    for (int i = 1; i <= 3; ++i)
      if (sampling::uniform_int(rng, 0, 1)) s.push_back(i);
    CHECK(is_independent(f, s) == oracle::independent_by_minors(f, s));
    CHECK(is_independent(f, s) == (rank(selection_matrix(f, s)) == s.size()));
  }
}

TEST_CASE("span_equal") {
  const auto f = family(2, {{1, 0}, {0, 1}});
  CHECK(span_equal(f, Idx{1, 2}, f, Idx{1, 2}));
  CHECK(span_equal(family(2, {{1, 0}}), Idx{1}, family(2, {{2, 0}}), Idx{1}));
  CHECK(!span_equal(f, Idx{1}, f, Idx{2}));
  CHECK(!span_equal(f, Idx{1}, f, Idx{1, 2}));
  CHECK_THROWS_AS(span_equal(family(2, {{1, 0}, {2, 0}}), Idx{1, 2}, f, Idx{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(span_equal(f, Idx{1}, family(3, {{1, 0, 0}}), Idx{1}), std::invalid_argument);
}

TEST_CASE("transition_scalar") {
  const auto f = family(2, {{1, 0}, {0, 1}});
  CHECK(transition_scalar(f, Idx{1, 2}, f, Idx{1, 2}) == 1);
  CHECK(transition_scalar(f, Idx{1, 2}, f, Idx{2, 1}) == -1);
  CHECK(transition_scalar(family(2, {{2, 0}}), Idx{1}, family(2, {{1, 0}}), Idx{1}) == 2);
  CHECK(transition_scalar(f, Idx{}, f, Idx{}) == 1);

  CHECK_THROWS_AS(transition_scalar(f, Idx{1}, f, Idx{2}), std::invalid_argument);
  CHECK_THROWS_AS(transition_scalar(f, Idx{1}, f, Idx{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(transition_scalar(family(2, {{0, 0}}), Idx{1}, f, Idx{1}), std::invalid_argument);
}

TEST_CASE("transition_scalar matches Plucker coordinate ratios and composes") {
  sampling::Rng rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int dim = sampling::uniform_int(rng, 1, 4);
    const int k = sampling::uniform_int(rng, 1, dim);
    const VectorFamily f = sampling::random_family(rng, k, dim);
    Idx all(static_cast<std::size_t>(k));
    std::iota(all.begin(), all.end(), 1);
    if (!is_independent(f, all)) continue;
    // g and h span the same space as f.
    const Partition column(std::vector<int>(static_cast<std::size_t>(k), 1));
    const VectorFamily g = sampling::per_column_change(rng, f, column, sampling::random_entry(rng) + 3);
    const VectorFamily h = sampling::per_column_change(rng, g, column, ratio(-1, 2));

    const Rational fg = transition_scalar(f, all, g, all);
    const Rational gh = transition_scalar(g, all, h, all);
    CHECK(fg == oracle::wedge_ratio(f, all, g, all));
    CHECK(fg * transition_scalar(g, all, f, all) == 1);
    CHECK(fg * gh == transition_scalar(f, all, h, all));
    CHECK(transition_scalar(f, all, f, all) == 1);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("vector family validation") {
  CHECK_THROWS_AS(family(2, {{1, 0, 0}}), std::invalid_argument);
  const auto f = family(3, {{1, 2, 3}});
  CHECK(f.size() == 1);
  CHECK(f[1][2] == 3);
}
