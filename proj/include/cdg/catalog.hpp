#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdg/group.hpp"

namespace cdg {

/// Construction recipe for a catalog group.
struct Recipe {
  enum class Kind {
    cyclic,        // params: {n}
    abelian,       // params: direct factor orders
    dihedral,      // params: {order}, order = 2n with n >= 3
    dicyclic,      // params: {order}, order = 4n with n >= 2
    symmetric,     // params: {n}
    alternating,   // params: {n}
    frobenius,     // params: {p, q, r}: C_p ⋊ C_q with r of order q mod p
    extraspecial,  // params: {p, variant}: variant 0 = exponent p, 1 = exponent p^2
    product,       // children: the two factors
    file,          // path: group file on disk
  };

  Kind kind = Kind::cyclic;
  std::vector<std::uint32_t> params;
  std::vector<Recipe> children;
  std::string path;
};

struct CatalogEntry {
  std::string name;
  Recipe recipe;
  std::uint64_t order = 0;
};

/// Deterministic construction; throws InvalidRecipe when the recipe's
/// arithmetic preconditions fail.
FiniteGroup build(const CatalogEntry& entry, std::uint32_t cap = FiniteGroup::kDefaultCap);

/// The 28 groups of order at most 15, one entry per isomorphism class.
std::vector<CatalogEntry> all_groups_up_to_15();

/// Family instances with order <= max_order: cyclic, abelian, dihedral,
/// dicyclic, symmetric (n <= 5), alternating (n <= 6), Frobenius,
/// extraspecial (p <= 7), and coprime direct products of family members;
/// de-duplicated by isomorphism within each order.
std::vector<CatalogEntry> extended_corpus(std::uint32_t max_order);

/// Parses family names such as "C12", "D10", "Dic12", "Q8", "S4", "A5",
/// "F(7,3)", "ES+(27)", and products joined with 'x'.
std::optional<CatalogEntry> entry_from_name(const std::string& name);

}  // namespace cdg
