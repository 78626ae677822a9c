#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdg/codegree.hpp"
#include "cdg/group.hpp"

namespace cdg {

/// Frobenius structure: normal kernel with the centralizer condition and a
/// complement of coprime order meeting the kernel trivially.
struct FrobeniusWitness {
  Subgroup kernel;
  Subgroup complement;
};

/// Normal chain 1 < K < L < G with L Frobenius over K and G/K Frobenius
/// over L/K.
struct TwoFrobeniusWitness {
  Subgroup k;
  Subgroup l;
};

/// Searches normal subgroups N with gcd(|N|, |G:N|) = 1 satisfying
/// C_G(x) <= N for every nonidentity x in N; the complement is then found
/// by subgroup search. Returns the witness with the smallest kernel.
std::optional<FrobeniusWitness> frobenius_witness(const FiniteGroup& g, const ConjugacyData& cc);

std::optional<TwoFrobeniusWitness> two_frobenius_witness(const FiniteGroup& g,
                                                         const ConjugacyData& cc);

struct PrimePowerPredicate {
  bool all_prime_powers = false;  // every nonprincipal codegree has one prime factor
  bool rhs = false;               // p-group, or Frobenius with exactly two prime divisors
  bool agree = false;
};

PrimePowerPredicate prime_power_codegree_predicate(const FiniteGroup& g, const ConjugacyData& cc,
                                                   const std::vector<CodegreeRecord>& records);

/// Backtracking isomorphism test for groups of order up to kIsoBound.
/// Prefiltered by order, class-size and element-order fingerprints; abelian
/// pairs are decided by their element-order multisets.
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

inline constexpr std::uint32_t kIsoBound = 256;

}  // namespace cdg
