#pragma once

// Sparse tensors in (Q^r)^{tensor n} and the right place-permutation action
//   (v_1 (x) ... (x) v_n) sigma = v_sigma(1) (x) ... (x) v_sigma(n).

#include <map>
#include <vector>

#include "symtensor/combinatorics.hpp"
#include "symtensor/exact_linalg.hpp"
#include "symtensor/group_algebra.hpp"

namespace symtensor {

/// 1-based basis indices (i_1, ..., i_n), each in 1..dim.
using MultiIndex = std::vector<int>;

class SparseTensor {
 public:
  using Entries = std::map<MultiIndex, Rational>;

  SparseTensor(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const Entries& entries() const { return entries_; }
  Rational at(const MultiIndex& index) const;
  bool is_zero() const { return entries_.empty(); }

  /// Adds coeff at index; zero results are erased so that the map stays canonical.
  void add(const MultiIndex& index, const Rational& coeff);

  SparseTensor& operator+=(const SparseTensor& other);
  SparseTensor& operator*=(const Rational& scalar);

  bool operator==(const SparseTensor&) const = default;

 private:
  void require_shape(const SparseTensor& other) const;
  void require_index(const MultiIndex& index) const;

  int dim_;
  int order_;
  Entries entries_;
};

SparseTensor decomposable(const VectorFamily& family);
SparseTensor act(const SparseTensor& x, const Permutation& sigma);
SparseTensor apply_element(const SparseTensor& x, const GroupAlgebraElement& g);

inline bool is_zero(const SparseTensor& x) { return x.is_zero(); }
/// Throws std::invalid_argument if dim or order differ.
bool tensor_equal(const SparseTensor& x, const SparseTensor& y);

/// v^{(x)} T_lambda.
SparseTensor symmetrize(const VectorFamily& family, const Partition& lambda);

}  // namespace symtensor
