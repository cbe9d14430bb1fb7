#include "symtensor/sampling.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace symtensor::sampling {

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Rational random_entry(Rng& rng) {
  const int roll = uniform_int(rng, 0, 9);
  if (roll < 3) return 0;
  Rational x(uniform_int(rng, -2, 2));
  if (roll == 9) x /= uniform_int(rng, 2, 3);
  return x;
}

VectorFamily random_family(Rng& rng, int n, int dim) {
  std::vector<std::vector<Rational>> vectors(static_cast<std::size_t>(n));
  for (auto& vec : vectors) {
    vec.resize(static_cast<std::size_t>(dim));
    for (auto& x : vec) x = random_entry(rng);
  }
  return VectorFamily(dim, std::move(vectors));
}

VectorFamily adversarial_family(Rng& rng, int n, int dim) {
  std::vector<std::vector<Rational>> vectors = random_family(rng, n, dim).vectors();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    const int roll = uniform_int(rng, 0, 5);
    const auto source = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1));
    if (roll == 0) {
      vectors[i] = vectors[source];
    } else if (roll == 1) {
      Rational scale = ratio(uniform_int(rng, 1, 3), uniform_int(rng, 1, 2));
      if (uniform_int(rng, 0, 1)) scale = -scale;
      for (std::size_t j = 0; j < vectors[i].size(); ++j) vectors[i][j] = scale * vectors[source][j];
    } else if (roll == 2) {
      std::fill(vectors[i].begin(), vectors[i].end(), Rational(0));
    }
  }
  return VectorFamily(dim, std::move(vectors));
}

Tableau random_filling(Rng& rng, const Partition& lambda) {
  std::vector<int> word(static_cast<std::size_t>(lambda.size()));
  std::iota(word.begin(), word.end(), 1);
  for (std::size_t i = word.size(); i > 1; --i)
    std::swap(word[i - 1], word[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
  std::vector<std::vector<int>> rows;
  auto it = word.begin();
  for (int part : lambda.parts()) {
    rows.emplace_back(it, it + part);
    it += part;
  }
  return Tableau(std::move(rows));
}

namespace {

Rational random_unit_scalar(Rng& rng) {
  static const std::array<Rational, 6> choices{Rational(1), Rational(2), ratio(1, 2),
                                               Rational(-1), Rational(3), ratio(-2, 3)};
  return choices[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(choices.size()) - 1))];
}

// Factors alpha_1..alpha_m with the given product.
std::vector<Rational> factors_with_product(Rng& rng, std::size_t m, const Rational& product) {
  std::vector<Rational> alphas(m);
  Rational running = 1;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    alphas[j] = random_unit_scalar(rng);
    running *= alphas[j];
  }
  if (m > 0) alphas[m - 1] = product / running;
  return alphas;
}

// Unit lower times unit upper triangular: determinant 1.
Matrix random_unimodular(Rng& rng, std::size_t k) {
  Matrix lower = Matrix::identity(k), upper = Matrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = uniform_int(rng, -1, 1);
      upper(j, i) = uniform_int(rng, -1, 1);
    }
  return lower * upper;
}

}  // namespace

VectorFamily scaled_copy(Rng& rng, const VectorFamily& v, const Rational& product) {
  const auto alphas = factors_with_product(rng, static_cast<std::size_t>(v.size()), product);
  std::vector<std::vector<Rational>> vectors = v.vectors();
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (auto& x : vectors[i]) x *= alphas[i];
  return VectorFamily(v.dim(), std::move(vectors));
}

VectorFamily per_column_change(Rng& rng, const VectorFamily& v, const Partition& lambda,
                               const Rational& product) {
  if (v.size() != lambda.size()) throw std::invalid_argument("per_column_change: size mismatch");
  const auto columns = random_filling(rng, lambda).columns();
  const auto alphas = factors_with_product(rng, columns.size(), product);
  std::vector<std::vector<Rational>> vectors = v.vectors();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& col = columns[c];
    Matrix m = random_unimodular(rng, col.size());
    for (std::size_t b = 0; b < col.size(); ++b) m(0, b) *= alphas[c];
    for (std::size_t a = 0; a < col.size(); ++a) {
      std::vector<Rational> combined(static_cast<std::size_t>(v.dim()));
      for (std::size_t b = 0; b < col.size(); ++b)
        for (std::size_t j = 0; j < combined.size(); ++j) combined[j] += m(a, b) * v[col[b]][j];
      vectors[static_cast<std::size_t>(col[a] - 1)] = std::move(combined);
    }
  }
  return VectorFamily(v.dim(), std::move(vectors));
}

VectorFamily shuffled(Rng& rng, const VectorFamily& v) {
  std::vector<std::vector<Rational>> vectors = v.vectors();
  for (std::size_t i = vectors.size(); i > 1; --i)
    std::swap(vectors[i - 1], vectors[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(i) - 1))]);
  return VectorFamily(v.dim(), std::move(vectors));
}

InstancePair random_pair(Rng& rng, const Partition& lambda, int dim, int slot) {
  const int n = lambda.size();
  switch (((slot % 8) + 8) % 8) {
    case 0: return {random_family(rng, n, dim), random_family(rng, n, dim), "independent"};
    case 1: {
      VectorFamily v = random_family(rng, n, dim);
      VectorFamily u = scaled_copy(rng, v, 1);
      return {std::move(v), std::move(u), "scaled_equal"};
    }
    case 2: {
      VectorFamily v = random_family(rng, n, dim);
      VectorFamily u = per_column_change(rng, v, lambda, 1);
      return {std::move(v), std::move(u), "per_column_equal"};
    }
    case 3: {
      VectorFamily v = random_family(rng, n, dim);
      VectorFamily u = scaled_copy(rng, v, 2);
      return {std::move(v), std::move(u), "scaled_near_miss"};
    }
    case 4: {
      VectorFamily v = random_family(rng, n, dim);
      VectorFamily u = per_column_change(rng, v, lambda, uniform_int(rng, 0, 1) ? Rational(-1) : Rational(2));
      return {std::move(v), std::move(u), "per_column_near_miss"};
    }
    case 5: {
      VectorFamily v = random_family(rng, n, dim);
      VectorFamily u = shuffled(rng, v);
      return {std::move(v), std::move(u), "shuffled"};
    }
    case 6: {
      VectorFamily v = adversarial_family(rng, n, dim);
      VectorFamily u = scaled_copy(rng, v, 1);
      return {std::move(v), std::move(u), "adversarial_equal"};
    }
    default: {
      VectorFamily v = adversarial_family(rng, n, dim);
      VectorFamily u = per_column_change(rng, v, lambda, ratio(1, 2));
      return {std::move(v), std::move(u), "adversarial_near_miss"};
    }
  }
}

}  // namespace symtensor::sampling
