#pragma once

// The rational group algebra Q[S_n], stored sparsely.
//
// Products follow permutation composition: (x * y) has coefficient
// sum_{s t = p} x_s y_t at p. Because S_n acts on tensors from the right,
// applying x and then y to a tensor is the same as applying x * y.

#include <map>
#include <optional>

#include "symtensor/combinatorics.hpp"
#include "symtensor/exact_linalg.hpp"

namespace symtensor {

class GroupAlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int degree) : degree_(degree) {}
  static GroupAlgebraElement identity(int n);
  static GroupAlgebraElement basis(const Permutation& sigma, const Rational& coeff = 1);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation& sigma) const;

  /// Adds coeff * sigma, dropping the term if it cancels.
  void add_term(const Permutation& sigma, const Rational& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& scalar);

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  void require_degree(const GroupAlgebraElement& other) const;

  int degree_;
  Terms terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement x, const GroupAlgebraElement& y);
GroupAlgebraElement operator-(GroupAlgebraElement x, const GroupAlgebraElement& y);
GroupAlgebraElement operator*(const Rational& scalar, GroupAlgebraElement x);

/// Convolution product; throws std::invalid_argument on degree mismatch.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  return ga_multiply(x, y);
}

/// If x = k * y for some rational k, returns k. y must be nonzero.
std::optional<Rational> scalar_ratio(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// a_T: sum of the row group.
GroupAlgebraElement row_symmetrizer(const Tableau& t);
/// b_T: signed sum of the column group.
GroupAlgebraElement column_antisymmetrizer(const Tableau& t);
/// c_T = b_T a_T.
GroupAlgebraElement young_symmetrizer(const Tableau& t);
/// T_lambda = (chi(1)/n!) sum_sigma chi(sigma) sigma.
GroupAlgebraElement isotypic_projector(const Partition& lambda);
/// Sum of c_T over every filling T of lambda.
GroupAlgebraElement sum_young_symmetrizers(const Partition& lambda);

}  // namespace symtensor
