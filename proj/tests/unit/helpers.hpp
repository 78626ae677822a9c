#pragma once

#include <vector>

#include "cdg/catalog.hpp"
#include "cdg/group.hpp"

namespace cdg::testing {

/// Permutation from cycles given as 0-based point lists.
inline Permutation cycles(std::uint32_t degree, std::vector<std::vector<std::uint32_t>> cs) {
  std::vector<std::uint32_t> im(degree);
  for (std::uint32_t i = 0; i < degree; ++i) im[i] = i;
  for (const auto& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i) im[c[i]] = c[(i + 1) % c.size()];
  return Permutation(im);
}

inline FiniteGroup named(const char* name) { return build(*entry_from_name(name)); }

/// Brute-force conjugacy class of one element, conjugating by everything.
inline std::vector<std::uint32_t> conjugacy_orbit(const FiniteGroup& g, std::uint32_t x) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::uint32_t> orbit;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    std::uint32_t y = g.mult(g.mult(g.inv(a), x), a);
    if (!seen[y]) {
      seen[y] = true;
      orbit.push_back(y);
    }
  }
  return orbit;
}

}  // namespace cdg::testing
