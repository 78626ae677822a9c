#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdg/cyclotomic.hpp"
#include "cdg/group.hpp"

namespace cdg {

/// Class-algebra structure constants a(i,j,k): the number of ways a fixed
/// element of class k factors as (element of class i) * (element of class j).
struct ClassConstants {
  std::uint32_t r = 0;
  std::vector<std::uint32_t> data;  // r^3, index (i*r + j)*r + k

  std::uint32_t at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return data[(static_cast<std::size_t>(i) * r + j) * r + k];
  }
};

ClassConstants class_constants(const FiniteGroup& g, const ConjugacyData& cc);

/// Exact irreducible character table. Row 0 is the principal character;
/// remaining rows are sorted by (degree, lexicographic canonical values).
/// Columns follow the conjugacy class order (column 0 = identity class).
struct CharacterTable {
  std::uint32_t conductor = 1;  // = exponent of the group
  std::vector<std::uint32_t> degrees;
  std::vector<std::vector<Cyclotomic>> values;  // rows x classes
  std::vector<std::uint32_t> class_sizes;
  std::vector<std::uint32_t> centralizer_orders;

  std::uint32_t count() const { return static_cast<std::uint32_t>(degrees.size()); }
};

/// Least prime p = 1 (mod exponent) with p > 2*sqrt(order), searched within
/// the first 10000 primes; throws NoSuitablePrime past that bound.
std::uint64_t dixon_prime(std::uint64_t order, std::uint32_t exponent);

/// Exact character table by the modular eigenvector method: split the
/// common eigenspaces of the class matrices over GF(p), recover degrees
/// from the central characters via orthogonality, then lift eigenvalue
/// multiplicities to exact cyclotomic values through the class power maps.
/// Performs a full orthogonality self-check before returning.
CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cc);

/// Character table of the cyclic group of order n over its root-of-unity
/// presentation; identical (including row order) to what character_table
/// computes for the catalog cyclic group, but linear in memory and fast for
/// large n.
CharacterTable cyclic_character_table(std::uint32_t n);

/// ker(row) = elements where the character value equals the degree.
Subgroup character_kernel(const CharacterTable& table, std::uint32_t row, const FiniteGroup& g,
                          const ConjugacyData& cc);

/// A subgroup packaged with everything restriction needs.
struct SubgroupCharacters {
  EmbeddedGroup embedded;
  ConjugacyData cc;
  CharacterTable table;
};

SubgroupCharacters subgroup_characters(const FiniteGroup& g, const Subgroup& s);

/// Constituents of the restriction of `row` to the subgroup, as
/// (row in the subgroup table, multiplicity) pairs with multiplicity > 0.
std::vector<std::pair<std::uint32_t, std::uint32_t>> restriction_constituents(
    const CharacterTable& table, std::uint32_t row, const FiniteGroup& g, const ConjugacyData& cc,
    const SubgroupCharacters& sub);

/// Exact orthogonality verification (rows, columns, degree sum). Returns
/// the first violated relation as a message, or empty when all hold.
std::string orthogonality_violation(const CharacterTable& table, std::uint64_t order,
                                    const std::vector<std::uint32_t>& inverse_class);

}  // namespace cdg
