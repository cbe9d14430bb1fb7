#include "symtensor/group_algebra.hpp"

#include <stdexcept>

#include "symtensor/characters.hpp"

namespace symtensor {

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
  return basis(Permutation::identity(n));
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& sigma, const Rational& coeff) {
  GroupAlgebraElement x(sigma.degree());
  x.add_term(sigma, coeff);
  return x;
}

Rational GroupAlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& sigma, const Rational& coeff) {
  if (sigma.degree() != degree_) throw std::invalid_argument("group algebra: degree mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(sigma, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void GroupAlgebraElement::require_degree(const GroupAlgebraElement& other) const {
  if (other.degree_ != degree_) throw std::invalid_argument("group algebra: degree mismatch");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  require_degree(other);
  for (const auto& [sigma, c] : other.terms_) add_term(sigma, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  require_degree(other);
  for (const auto& [sigma, c] : other.terms_) add_term(sigma, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, c] : terms_) c *= scalar;
  return *this;
}

GroupAlgebraElement operator+(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x += y; }
GroupAlgebraElement operator-(GroupAlgebraElement x, const GroupAlgebraElement& y) { return x -= y; }
GroupAlgebraElement operator*(const Rational& scalar, GroupAlgebraElement x) { return x *= scalar; }

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("ga_multiply: degree mismatch");
  GroupAlgebraElement product(x.degree());
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms()) product.add_term(compose(s, t), a * b);
  return product;
}

std::optional<Rational> scalar_ratio(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (y.is_zero()) throw std::invalid_argument("scalar_ratio: zero denominator element");
  if (x.degree() != y.degree()) throw std::invalid_argument("scalar_ratio: degree mismatch");
  const auto& [sigma, c] = *y.terms().begin();
  const Rational k = x.coefficient(sigma) / c;
  if (x == k * y) return k;
  return std::nullopt;
}

GroupAlgebraElement row_symmetrizer(const Tableau& t) {
  GroupAlgebraElement a(t.shape().size());
  for (const Permutation& sigma : row_group(t)) a.add_term(sigma, 1);
  return a;
}

GroupAlgebraElement column_antisymmetrizer(const Tableau& t) {
  GroupAlgebraElement b(t.shape().size());
  for (const Permutation& sigma : col_group(t)) b.add_term(sigma, sign(sigma));
  return b;
}

GroupAlgebraElement young_symmetrizer(const Tableau& t) {
  return ga_multiply(column_antisymmetrizer(t), row_symmetrizer(t));
}

GroupAlgebraElement isotypic_projector(const Partition& lambda) {
  const int n = lambda.size();
  check_size_limit(n, "isotypic_projector");
  const Rational scale = ratio(static_cast<long>(hook_length_dimension(lambda)),
                               static_cast<long>(factorial(n)));
  GroupAlgebraElement projector(n);
  for_each_permutation(n, [&](const Permutation& sigma) {
    const std::int64_t chi = mn_character(lambda, cycle_type(sigma));
    projector.add_term(sigma, scale * Rational(static_cast<long>(chi)));
  });
  return projector;
}

GroupAlgebraElement sum_young_symmetrizers(const Partition& lambda) {
  GroupAlgebraElement sum(lambda.size());
  for_each_filling(lambda, [&](const Tableau& t) { sum += young_symmetrizer(t); });
  return sum;
}

}  // namespace symtensor
