#include "cdg/codegree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cdg/errors.hpp"
#include "cdg/numtheory.hpp"

namespace cdg {

std::vector<CodegreeRecord> codegrees(const CharacterTable& table) {
  const std::uint32_t r = table.count();
  std::uint64_t order = 0;
  for (auto s : table.class_sizes) order += s;

  std::vector<CodegreeRecord> out;
  out.reserve(r);
  for (std::uint32_t row = 0; row < r; ++row) {
    const Cyclotomic degree_value =
        Cyclotomic::from_rational(Rational(table.degrees[row]), table.conductor);
    std::uint64_t kernel_order = 0;
    for (std::uint32_t k = 0; k < r; ++k)
      if (table.values[row][k] == degree_value) kernel_order += table.class_sizes[k];

    if (kernel_order == 0 || order % kernel_order != 0)
      throw NonIntegralCodegree("kernel order does not divide the group order");
    const std::uint64_t index = order / kernel_order;
    if (index % table.degrees[row] != 0)
      throw NonIntegralCodegree("degree does not divide the kernel index");

    CodegreeRecord rec;
    rec.row = row;
    rec.codegree = index / table.degrees[row];
    rec.factorization = factorize(rec.codegree);
    out.push_back(std::move(rec));
  }
  if (!out.empty() && out[0].codegree != 1)
    throw NonIntegralCodegree("principal character codegree differs from 1");
  return out;
}

std::vector<std::uint64_t> nonprincipal_codegree_multiset(
    const std::vector<CodegreeRecord>& records) {
  std::vector<std::uint64_t> out;
  for (const auto& rec : records)
    if (rec.row != 0) out.push_back(rec.codegree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool share_prime(const CodegreeRecord& a, const CodegreeRecord& b) {
  for (const auto& [p, e1] : a.factorization)
    for (const auto& [q, e2] : b.factorization)
      if (p == q) return true;
  return false;
}

}  // namespace

CodegreeGraph build_gamma(const std::vector<CodegreeRecord>& records) {
  CodegreeGraph g;
  std::vector<const CodegreeRecord*> vertices;
  for (const auto& rec : records) {
    if (rec.row == 0) continue;  // principal character is not a vertex
    g.vertex_rows.push_back(rec.row);
    g.vertex_codegrees.push_back(rec.codegree);
    vertices.push_back(&rec);
  }
  for (std::uint32_t a = 0; a < vertices.size(); ++a)
    for (std::uint32_t b = a + 1; b < vertices.size(); ++b)
      if (share_prime(*vertices[a], *vertices[b])) g.edges.emplace_back(a, b);
  return g;
}

PrimeCodegreeGraph build_delta(const std::vector<CodegreeRecord>& records) {
  PrimeCodegreeGraph g;
  std::set<std::uint64_t> primes;
  for (const auto& rec : records)
    if (rec.row != 0)
      for (const auto& [p, e] : rec.factorization) primes.insert(p);
  g.primes.assign(primes.begin(), primes.end());

  std::map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < g.primes.size(); ++i) index[g.primes[i]] = i;

  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& rec : records) {
    if (rec.row == 0) continue;
    for (std::size_t x = 0; x < rec.factorization.size(); ++x)
      for (std::size_t y = x + 1; y < rec.factorization.size(); ++y)
        edges.emplace(index[rec.factorization[x].first], index[rec.factorization[y].first]);
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

GraphAnalytics analyze_graph(std::uint32_t vertex_count,
                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  GraphAnalytics out;
  out.vertex_count = vertex_count;
  out.edge_count = static_cast<std::uint32_t>(edges.size());
  out.component_of.assign(vertex_count, UINT32_MAX);

  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // Components by breadth-first search from each unvisited vertex.
  for (std::uint32_t start = 0; start < vertex_count; ++start) {
    if (out.component_of[start] != UINT32_MAX) continue;
    const std::uint32_t comp = out.component_count++;
    std::vector<std::uint32_t> queue{start};
    out.component_of[start] = comp;
    for (std::uint32_t head = 0; head < queue.size(); ++head)
      for (std::uint32_t next : adj[queue[head]])
        if (out.component_of[next] == UINT32_MAX) {
          out.component_of[next] = comp;
          queue.push_back(next);
        }
  }

  // Eccentricities give per-component diameters.
  out.diameter_per_component.assign(out.component_count, 0);
  std::vector<std::int64_t> dist(vertex_count);
  for (std::uint32_t start = 0; start < vertex_count; ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[start] = 0;
    std::vector<std::uint32_t> queue{start};
    for (std::uint32_t head = 0; head < queue.size(); ++head)
      for (std::uint32_t next : adj[queue[head]])
        if (dist[next] < 0) {
          dist[next] = dist[queue[head]] + 1;
          queue.push_back(next);
        }
    auto& diameter = out.diameter_per_component[out.component_of[start]];
    for (std::uint32_t v = 0; v < vertex_count; ++v)
      if (dist[v] > static_cast<std::int64_t>(diameter))
        diameter = static_cast<std::uint32_t>(dist[v]);
  }

  // Triangles via sorted neighbor-set intersection per edge.
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  for (auto [a, b] : edges) {
    std::vector<std::uint32_t> common;
    std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(), adj[b].end(),
                          std::back_inserter(common));
    if (!common.empty()) {
      out.has_triangle = true;
      break;
    }
  }

  out.is_complete =
      static_cast<std::uint64_t>(edges.size()) * 2 ==
      static_cast<std::uint64_t>(vertex_count) * (vertex_count > 0 ? vertex_count - 1 : 0);
  return out;
}

bool component_count_agreement(const CodegreeGraph& gamma, const PrimeCodegreeGraph& delta) {
  return graph_analytics(gamma).component_count == graph_analytics(delta).component_count;
}

namespace {

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::string out = "graph \"" + name + "\" {\n";
  for (std::size_t v = 0; v < labels.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + labels[v] + "\"];\n";
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (auto [a, b] : sorted)
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace

std::string gamma_to_dot(const CodegreeGraph& g, const std::string& name) {
  std::vector<std::string> labels;
  for (auto c : g.vertex_codegrees) labels.push_back(std::to_string(c));
  return dot_graph(name, labels, g.edges);
}

std::string delta_to_dot(const PrimeCodegreeGraph& g, const std::string& name) {
  std::vector<std::string> labels;
  for (auto p : g.primes) labels.push_back(std::to_string(p));
  return dot_graph(name, labels, g.edges);
}

}  // namespace cdg
