#pragma once

// Exact linear algebra over the rationals. Nothing here touches floating point.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symtensor {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
Rational ratio(long p, long q);

/// Parses "p" or "p/q" with an optional leading '-', no whitespace.
/// Throws std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);
/// Canonical "p/q" or "p" form; inverse of parse_rational.
std::string format_rational(const Rational& x);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);
/// Throws std::invalid_argument for a non-square matrix.
Rational determinant(const Matrix& m);

/// n vectors in Q^dim.
class VectorFamily {
 public:
  VectorFamily() = default;
  /// Throws std::invalid_argument if some vector does not have length dim.
  VectorFamily(int dim, std::vector<std::vector<Rational>> vectors);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  /// 1-based.
  const std::vector<Rational>& operator[](int i) const { return vectors_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }

  bool operator==(const VectorFamily&) const = default;

 private:
  int dim_ = 0;
  std::vector<std::vector<Rational>> vectors_;
};

/// Rows are the selected vectors, in the order given by `indices` (1-based).
Matrix selection_matrix(const VectorFamily& family, std::span<const int> indices);

bool is_independent(const VectorFamily& family, std::span<const int> indices);

/// Whether span{F_i : i in s} = span{G_k : k in t}. Both selections must be
/// independent; a dependent selection is rejected with std::invalid_argument.
bool span_equal(const VectorFamily& f, std::span<const int> s,
                const VectorFamily& g, std::span<const int> t);

/// The scalar c with  F_{s1} ^ ... ^ F_{sk} = c * G_{t1} ^ ... ^ G_{tk},
/// wedges read in the order the indices are given. Requires equal sizes,
/// independent selections and equal spans (std::invalid_argument otherwise).
/// The empty wedge is the unit, so empty selections give 1.
Rational transition_scalar(const VectorFamily& f, std::span<const int> s,
                           const VectorFamily& g, std::span<const int> t);

}  // namespace symtensor
