#pragma once

// Permutations, partitions and tableaux of {1..n}.
//
// Conventions used across the library:
//   - everything is 1-based;
//   - a permutation is stored in one-line notation, images[i-1] = sigma(i);
//   - composition is (sigma tau)(i) = sigma(tau(i)).

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symtensor {

/// Raised when a factorial-size enumeration would exceed the configured limit.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSizeLimit = 8;

/// Process-wide bound on n for enumerations over S_n.
int size_limit();
void set_size_limit(int n);
void check_size_limit(int n, std::string_view what);

class ScopedSizeLimit {
 public:
  explicit ScopedSizeLimit(int n) : saved_(size_limit()) { set_size_limit(n); }
  ~ScopedSizeLimit() { set_size_limit(saved_); }
  ScopedSizeLimit(const ScopedSizeLimit&) = delete;
  ScopedSizeLimit& operator=(const ScopedSizeLimit&) = delete;

 private:
  int saved_;
};

class Partition;

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation; throws std::invalid_argument if not a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// Builds a permutation from disjoint cycles, e.g. from_cycles(5, {{1,2,3},{4,5}}).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
int sign(const Permutation& sigma);
Partition cycle_type(const Permutation& sigma);
/// Cycle notation with fixed points omitted, "()" for the identity.
std::string to_cycle_string(const Permutation& sigma);

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> enumerate_permutations(int n);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t k) const { return parts_[k]; }

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);
/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);
std::string to_string(const Partition& lambda);

class Tableau {
 public:
  /// Rows must have weakly decreasing lengths and contain 1..n exactly once.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::vector<int>> columns() const;
  bool is_standard() const;

  bool operator==(const Tableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

/// The column sets of a tableau, independent of how entries sit in rows.
/// Each column is stored in increasing order; equality is equality of the
/// multisets of column sets.
class ColumnSystem {
 public:
  ColumnSystem(Partition shape, std::vector<std::vector<int>> columns);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  /// Columns ordered by decreasing length, ties broken by smallest entry.
  ColumnSystem canonical() const;

  bool operator==(const ColumnSystem& other) const;
  bool operator<(const ColumnSystem& other) const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> columns_;
};

/// Every filling of the diagram, in lexicographic order of the row reading word.
std::vector<Tableau> enumerate_fillings(const Partition& lambda);
void for_each_filling(const Partition& lambda, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_standard(const Partition& lambda);
Tableau column_superstandard(const Partition& lambda);
ColumnSystem column_system_of(const Tableau& t);
/// Each multiset of column sets of shape lambda exactly once, in canonical form.
std::vector<ColumnSystem> enumerate_column_systems(const Partition& lambda);

std::vector<Permutation> row_group(const Tableau& t);
std::vector<Permutation> col_group(const Tableau& t);

std::uint64_t factorial(int n);

}  // namespace symtensor
