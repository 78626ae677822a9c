#include <doctest.h>

#include <algorithm>

#include "cdg/codegree.hpp"
#include "helpers.hpp"

using namespace cdg;
using cdg::testing::named;

namespace {

std::vector<std::uint64_t> codegree_multiset(const char* name) {
  auto g = named(name);
  auto cc = conjugacy_classes(g);
  auto t = character_table(g, cc);
  return nonprincipal_codegree_multiset(codegrees(t));
}

std::vector<CodegreeRecord> records_of(const char* name) {
  auto g = named(name);
  auto cc = conjugacy_classes(g);
  return codegrees(character_table(g, cc));
}

}  // namespace

TEST_CASE("codegree multisets of the named groups") {
  CHECK(codegree_multiset("S3") == std::vector<std::uint64_t>{2, 3});
  CHECK(codegree_multiset("D10") == std::vector<std::uint64_t>{2, 5, 5});
  CHECK(codegree_multiset("A4") == std::vector<std::uint64_t>{3, 3, 4});
  CHECK(codegree_multiset("F(7,3)") == std::vector<std::uint64_t>{3, 3, 7, 7});
  CHECK(codegree_multiset("Q8") == std::vector<std::uint64_t>{2, 2, 2, 4});
  CHECK(codegree_multiset("S4") == std::vector<std::uint64_t>{2, 3, 8, 8});
  CHECK(codegree_multiset("C6") == std::vector<std::uint64_t>{2, 3, 3, 6, 6});
  CHECK(codegree_multiset("A5") == std::vector<std::uint64_t>{12, 15, 20, 20});
}

TEST_CASE("codegree records") {
  auto recs = records_of("Q8");
  REQUIRE(recs.size() == 5);
  CHECK(recs[0].codegree == 1);  // principal
  for (const auto& r : recs) {
    std::uint64_t back = 1;
    for (auto [p, m] : r.factorization)
      for (std::uint32_t i = 0; i < m; ++i) back *= p;
    CHECK(back == r.codegree);
  }
  CHECK(recs[4].codegree == 4);
  CHECK(recs[4].is_prime_power());
}

TEST_CASE("gamma graphs") {
  {
    auto g = build_gamma(records_of("S3"));
    CHECK(g.vertex_rows.size() == 2);
    CHECK(g.edges.empty());  // gcd(2, 3) = 1
  }
  {
    auto g = build_gamma(records_of("A4"));
    CHECK(g.vertex_rows.size() == 3);
    REQUIRE(g.edges.size() == 1);  // only the two codegree-3 vertices join
    auto [a, b] = g.edges[0];
    CHECK(g.vertex_codegrees[a] == 3);
    CHECK(g.vertex_codegrees[b] == 3);
  }
  {
    auto g = build_gamma(records_of("S4"));
    auto stats = graph_analytics(g);
    CHECK(stats.component_count == 2);
    CHECK(stats.has_triangle);  // {2, 8, 8}
    CHECK_FALSE(stats.is_complete);
  }
}

TEST_CASE("delta graphs") {
  {
    auto d = build_delta(records_of("S3"));
    CHECK(d.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(d.edges.empty());
  }
  {
    auto d = build_delta(records_of("Q8"));
    CHECK(d.primes == std::vector<std::uint64_t>{2});
    CHECK(d.edges.empty());
  }
  {
    auto d = build_delta(records_of("C6"));
    CHECK(d.primes == std::vector<std::uint64_t>{2, 3});
    REQUIRE(d.edges.size() == 1);  // 6 divides a codegree
  }
}

TEST_CASE("graph analytics") {
  // single vertex: one component, diameter zero, complete
  auto single = analyze_graph(1, {});
  CHECK(single.component_count == 1);
  CHECK(single.diameter_per_component == std::vector<std::uint32_t>{0});
  CHECK_FALSE(single.has_triangle);
  CHECK(single.is_complete);

  // A5: complete K4 with triangles
  auto a5 = graph_analytics(build_gamma(records_of("A5")));
  CHECK(a5.component_count == 1);
  CHECK(a5.is_complete);
  CHECK(a5.has_triangle);
  CHECK(a5.diameter_per_component == std::vector<std::uint32_t>{1});

  // path of length 2: diameter 2, no triangle
  auto path = analyze_graph(3, {{0, 1}, {1, 2}});
  CHECK(path.component_count == 1);
  CHECK(path.diameter_per_component == std::vector<std::uint32_t>{2});
  CHECK_FALSE(path.has_triangle);
  CHECK_FALSE(path.is_complete);

  // two components with a triangle in one
  auto mixed = analyze_graph(5, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(mixed.component_count == 3);
  CHECK(mixed.has_triangle);
}

TEST_CASE("component count agreement") {
  for (const char* name : {"S3", "Q8", "A4", "S4", "A5", "C6", "F(7,3)", "D10"}) {
    auto recs = records_of(name);
    CHECK(component_count_agreement(build_gamma(recs), build_delta(recs)));
  }
}

TEST_CASE("gamma depends only on the codegree multiset") {
  auto recs = records_of("A5");
  auto base = graph_analytics(build_gamma(recs));
  // swap the two records of equal codegree 20
  std::vector<std::size_t> twenties;
  for (std::size_t i = 0; i < recs.size(); ++i)
    if (recs[i].codegree == 20) twenties.push_back(i);
  REQUIRE(twenties.size() == 2);
  std::swap(recs[twenties[0]].row, recs[twenties[1]].row);
  std::swap(recs[twenties[0]], recs[twenties[1]]);
  auto swapped = graph_analytics(build_gamma(recs));
  CHECK(base.edge_count == swapped.edge_count);
  CHECK(base.component_count == swapped.component_count);
  CHECK(base.has_triangle == swapped.has_triangle);
}

TEST_CASE("dot export") {
  auto recs = records_of("A4");
  auto dot = gamma_to_dot(build_gamma(recs), "A4");
  CHECK(dot.find("graph \"A4\"") == 0);
  CHECK(dot.find("label=\"3\"") != std::string::npos);
  CHECK(dot.find("label=\"4\"") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  // deterministic
  CHECK(gamma_to_dot(build_gamma(recs), "A4") == dot);

  auto ddot = delta_to_dot(build_delta(recs), "A4");
  CHECK(ddot.find("label=\"2\"") != std::string::npos);
  CHECK(ddot.find("label=\"3\"") != std::string::npos);
}
