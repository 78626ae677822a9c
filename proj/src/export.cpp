#include "cdg/export.hpp"

namespace cdg {

using json = nlohmann::ordered_json;

json table_to_json(const CharacterTable& table, const std::string& group_name) {
  std::uint64_t order = 0;
  for (auto s : table.class_sizes) order += s;

  json out;
  out["group"] = group_name;
  out["order"] = order;
  out["conductor"] = table.conductor;
  out["class_sizes"] = table.class_sizes;
  out["centralizer_orders"] = table.centralizer_orders;

  json rows = json::array();
  for (std::uint32_t i = 0; i < table.count(); ++i) {
    json row;
    row["degree"] = table.degrees[i];
    json values = json::array();
    for (std::uint32_t k = 0; k < table.count(); ++k) {
      json coeffs = json::array();
      for (const auto& c : table.values[i][k].dense_coefficients()) coeffs.push_back(c.to_string());
      values.push_back(std::move(coeffs));
    }
    row["values"] = std::move(values);
    rows.push_back(std::move(row));
  }
  out["irreducibles"] = std::move(rows);
  return out;
}

std::string recipe_to_string(const Recipe& recipe) {
  auto params = [&](const char* head) {
    std::string s = head;
    for (auto p : recipe.params) s += " " + std::to_string(p);
    return s;
  };
  switch (recipe.kind) {
    case Recipe::Kind::cyclic: return params("cyclic");
    case Recipe::Kind::abelian: return params("abelian");
    case Recipe::Kind::dihedral: return params("dihedral");
    case Recipe::Kind::dicyclic: return params("dicyclic");
    case Recipe::Kind::symmetric: return params("symmetric");
    case Recipe::Kind::alternating: return params("alternating");
    case Recipe::Kind::frobenius: return params("frobenius");
    case Recipe::Kind::extraspecial: return params("extraspecial");
    case Recipe::Kind::product:
      return "product(" + recipe_to_string(recipe.children.at(0)) + ", " +
             recipe_to_string(recipe.children.at(1)) + ")";
    case Recipe::Kind::file: return "file " + recipe.path;
  }
  return "?";
}

json catalog_manifest(const std::vector<CatalogEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    json row;
    row["name"] = e.name;
    row["order"] = e.order;
    row["recipe"] = recipe_to_string(e.recipe);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace cdg
