#include "symtensor/tensor.hpp"

#include <stdexcept>

namespace symtensor {

SparseTensor::SparseTensor(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1 || order < 0) throw std::invalid_argument("tensor: invalid dim/order");
}

Rational SparseTensor::at(const MultiIndex& index) const {
  require_index(index);
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseTensor::require_index(const MultiIndex& index) const {
  if (static_cast<int>(index.size()) != order_) throw std::invalid_argument("tensor: index has wrong order");
  for (int i : index)
    if (i < 1 || i > dim_) throw std::invalid_argument("tensor: basis index out of range");
}

void SparseTensor::add(const MultiIndex& index, const Rational& coeff) {
  require_index(index);
  if (coeff == 0) return;
  auto [it, inserted] = entries_.try_emplace(index, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) entries_.erase(it);
}

void SparseTensor::require_shape(const SparseTensor& other) const {
  if (other.dim_ != dim_ || other.order_ != order_) throw std::invalid_argument("tensor: shape mismatch");
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
  require_shape(other);
  for (const auto& [index, c] : other.entries_) add(index, c);
  return *this;
}

SparseTensor& SparseTensor::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [index, c] : entries_) c *= scalar;
  return *this;
}

SparseTensor decomposable(const VectorFamily& family) {
  SparseTensor x(family.dim(), family.size());
  const int n = family.size();
  // Expand slot by slot, skipping zero coordinates.
  std::map<MultiIndex, Rational> partial{{MultiIndex{}, Rational(1)}};
  for (int k = 1; k <= n; ++k) {
    std::map<MultiIndex, Rational> next;
    const auto& v = family[k];
    for (const auto& [prefix, c] : partial)
      for (int i = 1; i <= family.dim(); ++i) {
        const Rational& coord = v[static_cast<std::size_t>(i - 1)];
        if (coord == 0) continue;
        MultiIndex index = prefix;
        index.push_back(i);
        next.emplace(std::move(index), c * coord);
      }
    partial = std::move(next);
  }
  for (const auto& [index, c] : partial) x.add(index, c);
  return x;
}

SparseTensor act(const SparseTensor& x, const Permutation& sigma) {
  if (sigma.degree() != x.order()) throw std::invalid_argument("act: degree mismatch");
  SparseTensor y(x.dim(), x.order());
  MultiIndex moved(static_cast<std::size_t>(x.order()));
  for (const auto& [index, c] : x.entries()) {
    for (int k = 1; k <= x.order(); ++k)
      moved[static_cast<std::size_t>(k - 1)] = index[static_cast<std::size_t>(sigma(k) - 1)];
    y.add(moved, c);
  }
  return y;
}

SparseTensor apply_element(const SparseTensor& x, const GroupAlgebraElement& g) {
  if (g.degree() != x.order()) throw std::invalid_argument("apply_element: degree mismatch");
  SparseTensor y(x.dim(), x.order());
  MultiIndex moved(static_cast<std::size_t>(x.order()));
  for (const auto& [sigma, coeff] : g.terms())
    for (const auto& [index, c] : x.entries()) {
      for (int k = 1; k <= x.order(); ++k)
        moved[static_cast<std::size_t>(k - 1)] = index[static_cast<std::size_t>(sigma(k) - 1)];
      y.add(moved, coeff * c);
    }
  return y;
}

bool tensor_equal(const SparseTensor& x, const SparseTensor& y) {
  if (x.dim() != y.dim() || x.order() != y.order()) throw std::invalid_argument("tensor_equal: shape mismatch");
  return x == y;
}

SparseTensor symmetrize(const VectorFamily& family, const Partition& lambda) {
  if (family.size() != lambda.size()) throw std::invalid_argument("symmetrize: |v| != |lambda|");
  return apply_element(decomposable(family), isotypic_projector(lambda));
}

}  // namespace symtensor
