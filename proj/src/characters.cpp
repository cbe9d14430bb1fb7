#include "symtensor/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "symtensor/exact_linalg.hpp"

namespace symtensor {

std::uint64_t hook_length_dimension(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  mpz_class numerator = 1;
  for (int k = 2; k <= lambda.size(); ++k) numerator *= k;
  mpz_class hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  const mpz_class dim = numerator / hooks;
  if (!dim.fits_ulong_p()) throw std::overflow_error("hook_length_dimension: result too large");
  return dim.get_ui();
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex g_memo_mutex;
std::map<MemoKey, std::int64_t>& memo() {
  static std::map<MemoKey, std::int64_t> table;
  return table;
}

// Removing a border strip of length k from lambda is moving one bead of the
// beta-set {lambda_i + (l-1-i)} down by k to an empty position; the strip's
// height is the number of beads jumped over.
std::int64_t mn_rec(const std::vector<int>& lambda, const std::vector<int>& cycles) {
  if (cycles.empty()) return 1;

  MemoKey key{lambda, cycles};
  {
    std::lock_guard lock(g_memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }

  const int len = static_cast<int>(lambda.size());
  const int k = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());

  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t value = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > to && b < from) ++jumped;

    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.rbegin(), moved.rend());
    std::vector<int> smaller;
    for (int r = 0; r < len; ++r) {
      const int part = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = mn_rec(smaller, rest);
    value += (jumped % 2 == 0) ? sub : -sub;
  }

  std::lock_guard lock(g_memo_mutex);
  memo().emplace(std::move(key), value);
  return value;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw std::invalid_argument("mn_character: |lambda| != |cycle type|");
  return mn_rec(lambda.parts(), cycle_type.parts());
}

std::uint64_t class_size(const Partition& cycle_type) {
  // n! / z, z = prod_k k^{m_k} m_k!
  mpz_class z = 1;
  const auto& parts = cycle_type.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (std::size_t m = 1; m <= j - i; ++m) z *= static_cast<unsigned long>(parts[i]) * m;
    i = j;
  }
  mpz_class nfact = 1;
  for (int k = 2; k <= cycle_type.size(); ++k) nfact *= k;
  const mpz_class size = nfact / z;
  if (!size.fits_ulong_p()) throw std::overflow_error("class_size: result too large");
  return size.get_ui();
}

// ---------------------------------------------------------------------------
// Permutation characters

namespace {

// Ways to drop the labeled cycles cycles[next..] into rows so that every row
// is filled exactly.
std::uint64_t fill_rows(const std::vector<int>& cycles, std::size_t next, std::vector<int>& room) {
  if (next == cycles.size()) return 1;
  std::uint64_t ways = 0;
  for (int& r : room) {
    if (r < cycles[next]) continue;
    r -= cycles[next];
    ways += fill_rows(cycles, next + 1, room);
    r += cycles[next];
  }
  return ways;
}

}  // namespace

std::uint64_t young_permutation_character(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw std::invalid_argument("young_permutation_character: degree mismatch");
  std::vector<int> room = lambda.parts();
  return fill_rows(cycle_type.parts(), 0, room);
}

std::uint64_t young_permutation_character(const Partition& lambda, const Permutation& sigma) {
  if (lambda.size() != sigma.degree())
    throw std::invalid_argument("young_permutation_character: degree mismatch");
  return young_permutation_character(lambda, cycle_type(sigma));
}

// ---------------------------------------------------------------------------
// Tables

namespace {

CharacterTable empty_table(int n) {
  CharacterTable table;
  table.n = n;
  table.classes = enumerate_partitions(n);
  table.partitions = table.classes;
  for (const Partition& c : table.classes) table.class_sizes.push_back(class_size(c));
  return table;
}

}  // namespace

CharacterTable character_table(int n) {
  CharacterTable table = empty_table(n);
  for (const Partition& lambda : table.partitions) {
    std::vector<std::int64_t> row;
    for (const Partition& c : table.classes) row.push_back(mn_character(lambda, c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

CharacterTable character_table_oracle(int n) {
  check_size_limit(n, "character_table_oracle");
  CharacterTable table = empty_table(n);
  const std::size_t nc = table.classes.size();
  const Rational order(static_cast<unsigned long>(factorial(n)));

  auto inner = [&](const std::vector<Rational>& f, const std::vector<Rational>& g) {
    Rational sum = 0;
    for (std::size_t c = 0; c < nc; ++c)
      sum += Rational(static_cast<unsigned long>(table.class_sizes[c])) * f[c] * g[c];
    return Rational(sum / order);
  };

  // Each xi^lambda is chi^lambda plus irreducibles of dominating shapes, all
  // of which come earlier in reverse-lexicographic order.
  std::vector<std::vector<Rational>> irreducibles;
  for (const Partition& lambda : table.partitions) {
    std::vector<Rational> xi(nc);
    for (std::size_t c = 0; c < nc; ++c)
      xi[c] = static_cast<unsigned long>(young_permutation_character(lambda, table.classes[c]));
    for (const auto& chi : irreducibles) {
      const Rational coef = inner(xi, chi);
      for (std::size_t c = 0; c < nc; ++c) xi[c] -= coef * chi[c];
    }
    if (inner(xi, xi) != 1) throw std::logic_error("character_table_oracle: residue is not irreducible");
    std::vector<std::int64_t> row;
    for (const Rational& value : xi) {
      if (value.get_den() != 1 || !value.get_num().fits_slong_p())
        throw std::logic_error("character_table_oracle: non-integral character value");
      row.push_back(value.get_num().get_si());
    }
    irreducibles.push_back(std::move(xi));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace symtensor
