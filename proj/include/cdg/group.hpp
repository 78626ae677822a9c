#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdg/errors.hpp"
#include "cdg/permutation.hpp"

namespace cdg {

class FiniteGroup;
struct Subgroup;
struct QuotientResult;
struct EmbeddedGroup;

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::uint32_t cap);

/// Coset group G/N; throws NotNormal when N is not normal. Cosets are
/// indexed in order of their minimal member, so the identity coset is 0.
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

/// The subgroup as a standalone FiniteGroup with its induced
/// multiplication; to_parent maps local indices back to G.
EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

/// A fully enumerated finite group. Elements are indices 0..order-1 with
/// index 0 the identity. Multiplication is "left then right": mult(i, j)
/// is the element acting like i followed by j.
///
/// Groups up to kTableLimit elements carry a dense multiplication table;
/// larger permutation groups multiply by composing stored permutations.
class FiniteGroup {
 public:
  static constexpr std::uint32_t kDefaultCap = 20000;
  static constexpr std::uint32_t kTableLimit = 4096;

  /// Empty placeholder (order 0); every usable group comes from a factory.
  FiniteGroup() = default;

  /// Breadth-first closure of the generators, identity first, generators
  /// visited in input order. Deterministic element indexing.
  static FiniteGroup from_generators(std::uint32_t degree, std::vector<Permutation> gens,
                                     std::uint32_t cap = kDefaultCap);

  /// Validates the full set of group axioms; reports the violated axiom in
  /// the NotAGroup message. If the identity is not row 0, elements are
  /// relabeled by swapping so the identity-at-0 invariant holds.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table);

  std::uint32_t order() const { return order_; }
  std::uint32_t exponent() const { return exponent_; }

  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * order_ + j];
    return lookup_.at(elems_[i].then(elems_[j]).images());
  }

  std::uint32_t inv(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t element_order(std::uint32_t i) const { return elem_order_[i]; }

  /// i^k for k >= 0.
  std::uint32_t power(std::uint32_t i, std::uint64_t k) const {
    std::uint32_t acc = 0;
    k %= elem_order_[i];
    for (std::uint64_t t = 0; t < k; ++t) acc = mult(acc, i);
    return acc;
  }

  const std::vector<std::uint32_t>& generator_indices() const { return gens_; }

  bool has_permutations() const { return !elems_.empty(); }
  const Permutation& permutation(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t degree() const { return elems_.empty() ? 0 : elems_[0].degree(); }

  bool is_abelian() const;

 private:
  void finish_construction();  // inverses, element orders, exponent
  void pick_generators();      // greedy generating set for table-backed groups

  /// Table known to satisfy the group axioms (internal constructions);
  /// skips the O(n^3) associativity validation.
  static FiniteGroup from_trusted_table(std::vector<std::uint16_t> table, std::uint32_t n);

  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&, std::uint32_t);
  friend QuotientResult quotient(const FiniteGroup&, const Subgroup&);
  friend EmbeddedGroup subgroup_as_group(const FiniteGroup&, const Subgroup&);

  std::uint32_t order_ = 0;
  std::uint32_t exponent_ = 1;
  std::vector<Permutation> elems_;       // empty for table-only groups
  std::vector<std::uint16_t> table_;     // dense mult table, possibly empty
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, PermutationHash> lookup_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> elem_order_;
  std::vector<std::uint32_t> gens_;
};

/// Conjugacy class data. Classes are ordered by their minimal element, so
/// class 0 is always the identity class.
struct ConjugacyData {
  std::vector<std::vector<std::uint32_t>> classes;  // each sorted ascending
  std::vector<std::uint32_t> class_of;              // element -> class
  std::vector<std::uint32_t> reps;                  // minimal element per class
  std::vector<std::uint32_t> sizes;
  std::vector<std::uint32_t> inverse_class;
  /// power_map[c][k] = class of reps[c]^k, for k = 0..exponent inclusive.
  std::vector<std::vector<std::uint32_t>> power_map;

  std::uint32_t count() const { return static_cast<std::uint32_t>(classes.size()); }
};

ConjugacyData conjugacy_classes(const FiniteGroup& g);

/// A subgroup given by its sorted member list.
struct Subgroup {
  std::vector<std::uint32_t> members;  // sorted ascending, contains 0

  std::uint32_t order() const { return static_cast<std::uint32_t>(members.size()); }
  bool contains(std::uint32_t x) const {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    return it != members.end() && *it == x;
  }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();

/// Closure of a seed set under multiplication (hence a subgroup).
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seed);

Subgroup centralizer(const FiniteGroup& g, std::uint32_t x);

/// Subgroup generated by all commutators.
Subgroup derived_subgroup(const FiniteGroup& g);

/// [A, B]: subgroup generated by commutators of the two member sets.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// All normal subgroups, found as multiplication-closed unions of
/// conjugacy classes containing the identity class. Sorted by
/// (order, member list). Includes 1 and G.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const ConjugacyData& cc);

/// The maximal proper normal subgroups among `normals` (which must be the
/// full list for the answer to be meaningful).
std::vector<Subgroup> maximal_proper_normal_subgroups(const FiniteGroup& g,
                                                      const std::vector<Subgroup>& normals);

struct StructuralPredicates {
  bool is_abelian = false;
  bool is_simple = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<std::uint32_t> p_group_prime;  // set iff |G| is a prime power
};

StructuralPredicates structural_predicates(const FiniteGroup& g, const ConjugacyData& cc);

/// Componentwise product on index pairs, flattened as i * |H| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::uint32_t cap = FiniteGroup::kDefaultCap);

struct QuotientResult {
  FiniteGroup group;
  std::vector<std::uint32_t> projection;  // element of G -> coset index
};

struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<std::uint32_t> to_parent;  // local index -> parent element
};

}  // namespace cdg
