#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdg/character_table.hpp"

namespace cdg {

/// One character's codegree |G : ker| / degree with its prime factorization.
struct CodegreeRecord {
  std::uint32_t row = 0;
  std::uint64_t codegree = 1;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factorization;

  bool is_prime_power() const { return factorization.size() == 1; }
};

/// One record per table row, including the principal character (codegree 1).
/// Kernel orders are read off the table itself: a class is in the kernel
/// exactly when its value equals the degree.
std::vector<CodegreeRecord> codegrees(const CharacterTable& table);

/// Sorted nonprincipal codegree values (the multiset the classification
/// tables quote).
std::vector<std::uint64_t> nonprincipal_codegree_multiset(const std::vector<CodegreeRecord>& records);

/// Graph on nonprincipal characters; edge when the codegrees share a prime.
struct CodegreeGraph {
  std::vector<std::uint32_t> vertex_rows;            // table rows, ascending
  std::vector<std::uint64_t> vertex_codegrees;       // parallel to vertex_rows
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // vertex indices, a < b
};

/// Graph on primes dividing some nonprincipal codegree; edge between p and q
/// when pq divides one codegree.
struct PrimeCodegreeGraph {
  std::vector<std::uint64_t> primes;  // ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

CodegreeGraph build_gamma(const std::vector<CodegreeRecord>& records);
PrimeCodegreeGraph build_delta(const std::vector<CodegreeRecord>& records);

struct GraphAnalytics {
  std::uint32_t vertex_count = 0;
  std::uint32_t edge_count = 0;
  std::uint32_t component_count = 0;
  std::vector<std::uint32_t> component_of;        // per vertex
  std::vector<std::uint32_t> diameter_per_component;
  bool has_triangle = false;
  bool is_complete = true;  // vacuous for empty graphs
};

GraphAnalytics analyze_graph(std::uint32_t vertex_count,
                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

inline GraphAnalytics graph_analytics(const CodegreeGraph& g) {
  return analyze_graph(static_cast<std::uint32_t>(g.vertex_rows.size()), g.edges);
}
inline GraphAnalytics graph_analytics(const PrimeCodegreeGraph& g) {
  return analyze_graph(static_cast<std::uint32_t>(g.primes.size()), g.edges);
}

bool component_count_agreement(const CodegreeGraph& gamma, const PrimeCodegreeGraph& delta);

/// DOT rendering with deterministic vertex and edge order.
std::string gamma_to_dot(const CodegreeGraph& g, const std::string& name);
std::string delta_to_dot(const PrimeCodegreeGraph& g, const std::string& name);

}  // namespace cdg
