#pragma once

// Irreducible characters of S_n.
//
// Two independent routes are provided: the Murnaghan-Nakayama rule
// (mn_character, memoized per (lambda, cycle type)) and a Gram-Schmidt
// construction from permutation characters (character_table_oracle).

#include <cstdint>
#include <vector>

#include "symtensor/combinatorics.hpp"

namespace symtensor {

struct CharacterTable {
  int n = 0;
  /// Conjugacy classes as cycle types, reverse-lexicographic.
  std::vector<Partition> classes;
  std::vector<std::uint64_t> class_sizes;
  /// Row labels, reverse-lexicographic; rows[k][c] = chi^{partitions[k]}(classes[c]).
  std::vector<Partition> partitions;
  std::vector<std::vector<std::int64_t>> rows;

  bool operator==(const CharacterTable&) const = default;
};

/// n! / prod(hook lengths).
std::uint64_t hook_length_dimension(const Partition& lambda);

/// chi^lambda on the class of cycle type `cycle_type`, by border-strip removal.
/// Throws std::invalid_argument if |lambda| != |cycle_type|.
std::int64_t mn_character(const Partition& lambda, const Partition& cycle_type);

/// Size of the conjugacy class with the given cycle type.
std::uint64_t class_size(const Partition& cycle_type);

/// Number of tabloids of shape lambda fixed by sigma.
std::uint64_t young_permutation_character(const Partition& lambda, const Permutation& sigma);
std::uint64_t young_permutation_character(const Partition& lambda, const Partition& cycle_type);

/// Table assembled from mn_character.
CharacterTable character_table(int n);
/// Table built without the Murnaghan-Nakayama rule.
CharacterTable character_table_oracle(int n);

}  // namespace symtensor
