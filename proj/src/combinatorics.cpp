#include "symtensor/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace symtensor {

namespace {

std::atomic<int> g_size_limit{kDefaultSizeLimit};

// All permutations of the entries of `block`, as maps entry -> entry, applied
// on top of `base`.
void extend_by_block_permutations(const std::vector<Permutation>& base,
                                  const std::vector<int>& block,
                                  std::vector<Permutation>& out) {
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  for (const Permutation& p : base) {
    std::vector<int> image = sorted;
    do {
      std::vector<int> images = p.images();
      for (std::size_t k = 0; k < sorted.size(); ++k)
        images[static_cast<std::size_t>(sorted[k] - 1)] = image[k];
      out.emplace_back(std::move(images));
    } while (std::next_permutation(image.begin(), image.end()));
  }
}

std::vector<Permutation> block_group(int n, const std::vector<std::vector<int>>& blocks) {
  check_size_limit(n, "row/column group");
  std::vector<Permutation> group{Permutation::identity(n)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<Permutation> next;
    extend_by_block_permutations(group, block, next);
    group = std::move(next);
  }
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace

int size_limit() { return g_size_limit.load(); }

void set_size_limit(int n) {
  if (n < 1) throw std::invalid_argument("size limit must be positive");
  g_size_limit.store(n);
}

void check_size_limit(int n, std::string_view what) {
  if (n > size_limit()) {
    std::ostringstream msg;
    msg << what << ": n = " << n << " exceeds the size limit " << size_limit();
    throw SizeLimitError(msg.str());
  }
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
      throw std::invalid_argument("permutation images must be a bijection of {1..n}");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  return from_cycles(n, {{a, b}});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from - 1)])
        throw std::invalid_argument("cycles must be disjoint and within {1..n}");
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i)
    images[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i)
    images[static_cast<std::size_t>(sigma(i) - 1)] = i;
  return Permutation(std::move(images));
}

int sign(const Permutation& sigma) {
  // (-1)^(n - number of cycles)
  const Partition ct = cycle_type(sigma);
  return ((sigma.degree() - ct.length()) % 2 == 0) ? 1 : -1;
}

Partition cycle_type(const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = sigma(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

std::string to_cycle_string(const Permutation& sigma) {
  std::ostringstream out;
  std::vector<bool> seen(static_cast<std::size_t>(sigma.degree()), false);
  bool any = false;
  for (int start = 1; start <= sigma.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || sigma(start) == start) continue;
    any = true;
    out << '(';
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = sigma(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      if (i != start) out << ' ';
      out << i;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  check_size_limit(n, "enumerate_permutations");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(std::min(n, size_limit()))));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: argument out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (lambda.length() > 0) {
    cols.assign(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
      for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::string to_string(const Partition& lambda) {
  std::ostringstream out;
  out << '(';
  for (int k = 0; k < lambda.length(); ++k) out << (k ? "," : "") << lambda[static_cast<std::size_t>(k)];
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// Tableau

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)), shape_(shape_of_rows(rows_)) {
  const int n = shape_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& row : rows_)
    for (int x : row) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("tableau entries must be exactly {1..n}");
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols;
  if (rows_.empty()) return cols;
  cols.resize(rows_.front().size());
  for (const auto& row : rows_)
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  return cols;
}

bool Tableau::is_standard() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
      if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// ColumnSystem

ColumnSystem::ColumnSystem(Partition shape, std::vector<std::vector<int>> columns)
    : shape_(std::move(shape)), columns_(std::move(columns)) {
  const Partition lengths = conjugate(shape_);
  if (static_cast<int>(columns_.size()) != lengths.length())
    throw std::invalid_argument("column system: wrong number of columns");
  const int n = shape_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto& col = columns_[j];
    std::sort(col.begin(), col.end());
    if (static_cast<int>(col.size()) != lengths[j])
      throw std::invalid_argument("column system: column sizes must match the conjugate shape");
    for (int x : col) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("column system: columns must partition {1..n}");
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
  }
}

ColumnSystem ColumnSystem::canonical() const {
  auto cols = columns_;
  std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return ColumnSystem(shape_, std::move(cols));
}

bool ColumnSystem::operator==(const ColumnSystem& other) const {
  return shape_ == other.shape_ && canonical().columns_ == other.canonical().columns_;
}

bool ColumnSystem::operator<(const ColumnSystem& other) const {
  if (shape_ != other.shape_) return shape_ < other.shape_;
  return canonical().columns_ < other.canonical().columns_;
}

// ---------------------------------------------------------------------------
// Enumerations over tableaux

namespace {

Tableau tableau_from_word(const Partition& lambda, const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  for (int part : lambda.parts()) {
    rows.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(pos),
                      word.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(part)));
    pos += static_cast<std::size_t>(part);
  }
  return Tableau(std::move(rows));
}

}  // namespace

void for_each_filling(const Partition& lambda, const std::function<void(const Tableau&)>& visit) {
  for_each_permutation(lambda.size(), [&](const Permutation& word) {
    visit(tableau_from_word(lambda, word.images()));
  });
}

std::vector<Tableau> enumerate_fillings(const Partition& lambda) {
  std::vector<Tableau> out;
  for_each_filling(lambda, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

namespace {

// Places n+1 into every cell that keeps the partial tableau standard.
void standard_rec(const Partition& lambda, int next, std::vector<std::vector<int>>& rows,
                  std::vector<Tableau>& out) {
  if (next > lambda.size()) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t j = rows[i].size();
    if (static_cast<int>(j) >= lambda[i]) continue;
    if (i > 0 && rows[i - 1].size() <= j) continue;
    rows[i].push_back(next);
    standard_rec(lambda, next + 1, rows, out);
    rows[i].pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_standard(const Partition& lambda) {
  check_size_limit(lambda.size(), "enumerate_standard");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  standard_rec(lambda, 1, rows, out);
  return out;
}

Tableau column_superstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k].resize(static_cast<std::size_t>(lambda[k]));
  const Partition lengths = conjugate(lambda);
  int next = 1;
  for (int j = 0; j < lengths.length(); ++j)
    for (int i = 0; i < lengths[static_cast<std::size_t>(j)]; ++i)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = next++;
  return Tableau(std::move(rows));
}

ColumnSystem column_system_of(const Tableau& t) {
  return ColumnSystem(t.shape(), t.columns());
}

namespace {

// Chooses column `j` from the unused entries. Within a run of equal-length
// columns the smallest entry must increase, so each multiset is produced once.
void column_systems_rec(const Partition& shape, const Partition& lengths, std::size_t j,
                        std::vector<bool>& used, std::vector<std::vector<int>>& cols,
                        std::vector<ColumnSystem>& out) {
  if (j == cols.size()) {
    out.emplace_back(shape, cols);
    return;
  }
  const int n = shape.size();
  const int len = lengths[j];
  const bool tied = j > 0 && lengths[j - 1] == len;
  const int min_first = tied ? cols[j - 1].front() + 1 : 1;

  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == len) {
      cols[j] = chosen;
      for (int x : chosen) used[static_cast<std::size_t>(x - 1)] = true;
      column_systems_rec(shape, lengths, j + 1, used, cols, out);
      for (int x : chosen) used[static_cast<std::size_t>(x - 1)] = false;
      return;
    }
    for (int x = from; x <= n; ++x) {
      if (used[static_cast<std::size_t>(x - 1)]) continue;
      if (chosen.empty() && x < min_first) continue;
      chosen.push_back(x);
      pick(x + 1);
      chosen.pop_back();
    }
  };
  pick(1);
}

}  // namespace

std::vector<ColumnSystem> enumerate_column_systems(const Partition& lambda) {
  check_size_limit(lambda.size(), "enumerate_column_systems");
  const Partition lengths = conjugate(lambda);
  std::vector<bool> used(static_cast<std::size_t>(lambda.size()), false);
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(lengths.length()));
  std::vector<ColumnSystem> out;
  column_systems_rec(lambda, lengths, 0, used, cols, out);
  return out;
}

std::vector<Permutation> row_group(const Tableau& t) {
  return block_group(t.shape().size(), t.rows());
}

std::vector<Permutation> col_group(const Tableau& t) {
  return block_group(t.shape().size(), t.columns());
}

}  // namespace symtensor
