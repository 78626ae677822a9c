#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdg/catalog.hpp"
#include "cdg/character_table.hpp"

namespace cdg {

/// Character table as JSON: conductor, per-row degree, and per-entry dense
/// coefficient vectors over the power basis, with every coefficient an exact
/// integer or rational rendered as a string. Field order is fixed.
nlohmann::ordered_json table_to_json(const CharacterTable& table, const std::string& group_name);

/// Catalog manifest: name, order and construction recipe per entry.
nlohmann::ordered_json catalog_manifest(const std::vector<CatalogEntry>& entries);

std::string recipe_to_string(const Recipe& recipe);

}  // namespace cdg
