#pragma once

#include <string>

#include "cdg/group.hpp"

namespace cdg {

/// Parses the plain-text group format:
///   line 1: "perm <degree>" or "table <n>"
///   perm mode: one generator per line in disjoint-cycle notation with
///     1-based points, identity written "()"
///   table mode: n lines of n space-separated 0-based indices
/// Lines starting with '#' are comments; blank lines are ignored.
/// Syntax errors raise ParseError with line and column; axiom failures in
/// table mode raise NotAGroup.
FiniteGroup parse_group_file(const std::string& text,
                             std::uint32_t cap = FiniteGroup::kDefaultCap);

/// Reads and parses a group file from disk; throws Error when unreadable.
FiniteGroup load_group_file(const std::string& path,
                            std::uint32_t cap = FiniteGroup::kDefaultCap);

}  // namespace cdg
