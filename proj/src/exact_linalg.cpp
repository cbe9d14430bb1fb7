#include "symtensor/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace symtensor {

Rational ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational x(p, q);
  x.canonicalize();
  return x;
}

Rational parse_rational(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

  mpz_class p(std::string(num), 10);
  mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  if (text.front() == '-') p = -p;
  Rational x(p, q);
  x.canonicalize();
  return x;
}

std::string format_rational(const Rational& x) { return x.get_str(10); }

// ---------------------------------------------------------------------------

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

struct Elimination {
  std::size_t rank = 0;
  int swaps = 0;
  std::vector<std::size_t> pivot_cols;
};

// Row echelon form in place, rational Gauss with first-nonzero pivoting.
Elimination eliminate(Matrix& m) {
  Elimination e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
      ++e.swaps;
    }
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

void require_indices(const VectorFamily& family, std::span<const int> indices) {
  for (int i : indices)
    if (i < 1 || i > family.size()) throw std::invalid_argument("vector index out of range");
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return eliminate(work).rank;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix work = m;
  const Elimination e = eliminate(work);
  if (e.rank < m.rows()) return 0;
  Rational det = (e.swaps % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= work(i, i);
  return det;
}

// ---------------------------------------------------------------------------

VectorFamily::VectorFamily(int dim, std::vector<std::vector<Rational>> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 0) throw std::invalid_argument("negative ambient dimension");
  for (const auto& v : vectors_)
    if (static_cast<int>(v.size()) != dim_)
      throw std::invalid_argument("vector length does not match the ambient dimension");
}

Matrix selection_matrix(const VectorFamily& family, std::span<const int> indices) {
  require_indices(family, indices);
  Matrix m(indices.size(), static_cast<std::size_t>(family.dim()));
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (int j = 0; j < family.dim(); ++j) m(k, static_cast<std::size_t>(j)) = family[indices[k]][static_cast<std::size_t>(j)];
  return m;
}

bool is_independent(const VectorFamily& family, std::span<const int> indices) {
  return rank(selection_matrix(family, indices)) == indices.size();
}

bool span_equal(const VectorFamily& f, std::span<const int> s,
                const VectorFamily& g, std::span<const int> t) {
  if (f.dim() != g.dim()) throw std::invalid_argument("span_equal: ambient dimension mismatch");
  if (!is_independent(f, s) || !is_independent(g, t))
    throw std::invalid_argument("span_equal: dependent selection");
  if (s.size() != t.size()) return false;
  const Matrix a = selection_matrix(f, s);
  const Matrix b = selection_matrix(g, t);
  Matrix joint(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) joint(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) joint(a.rows() + i, j) = b(i, j);
  return rank(joint) == s.size();
}

Rational transition_scalar(const VectorFamily& f, std::span<const int> s,
                           const VectorFamily& g, std::span<const int> t) {
  if (s.size() != t.size()) throw std::invalid_argument("transition_scalar: size mismatch");
  if (s.empty()) return 1;
  if (!span_equal(f, s, g, t)) throw std::invalid_argument("transition_scalar: spans differ");

  // F = X G with X square; restricting both to k coordinates where G is
  // invertible gives det X = det F_p / det G_p.
  const Matrix a = selection_matrix(f, s);
  const Matrix b = selection_matrix(g, t);
  Matrix echelon = b;
  const Elimination e = eliminate(echelon);
  const std::size_t k = s.size();
  Matrix fp(k, k), gp(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      fp(i, j) = a(i, e.pivot_cols[j]);
      gp(i, j) = b(i, e.pivot_cols[j]);
    }
  return determinant(fp) / determinant(gp);
}

}  // namespace symtensor
