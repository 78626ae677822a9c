#include <doctest.h>

#include <fstream>
#include <map>

#include "cdg/export.hpp"
#include "cdg/group_file.hpp"
#include "cdg/structure.hpp"
#include "helpers.hpp"

using namespace cdg;
using cdg::testing::named;

TEST_CASE("the 28 groups through order 15") {
  auto catalog = all_groups_up_to_15();
  REQUIRE(catalog.size() == 28);
  std::map<std::uint64_t, std::vector<FiniteGroup>> by_order;
  for (const auto& e : catalog) {
    auto g = build(e);
    CHECK(g.order() == e.order);
    by_order[e.order].push_back(std::move(g));
  }
  const std::vector<int> counts{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  for (std::uint32_t n = 1; n <= 15; ++n)
    CHECK(by_order[n].size() == static_cast<std::size_t>(counts[n - 1]));
  // pairwise non-isomorphic within each order
  for (auto& [order, groups] : by_order)
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        CHECK_FALSE(is_isomorphic(groups[i], groups[j]));
}

TEST_CASE("catalog names are unique") {
  auto catalog = all_groups_up_to_15();
  std::map<std::string, int> seen;
  for (const auto& e : catalog) CHECK(++seen[e.name] == 1);
}

TEST_CASE("build is deterministic") {
  for (const char* name : {"F(7,3)", "Q8", "S4", "ES-(27)"}) {
    auto a = named(name), b = named(name);
    REQUIRE(a.order() == b.order());
    for (std::uint32_t i = 0; i < a.order(); ++i)
      for (std::uint32_t j = 0; j < a.order(); ++j) CHECK(a.mult(i, j) == b.mult(i, j));
  }
}

TEST_CASE("family recipes") {
  CHECK(named("D10").order() == 10);
  CHECK(named("Dic12").order() == 12);
  CHECK(named("S5").order() == 120);
  CHECK(named("A6").order() == 360);
  CHECK(named("ES+(27)").order() == 27);
  CHECK(named("ES-(27)").order() == 27);
  CHECK_FALSE(is_isomorphic(named("ES+(27)"), named("ES-(27)")));
  // exponent distinguishes the two extraspecial types
  CHECK(named("ES+(27)").exponent() == 3);
  CHECK(named("ES-(27)").exponent() == 9);

  auto f21 = named("F(7,3)");
  CHECK(f21.order() == 21);
  CHECK_FALSE(f21.is_abelian());

  CHECK_THROWS_AS(build({"bad", Recipe{Recipe::Kind::frobenius, {7, 3, 3}, {}, {}}, 21}),
                  InvalidRecipe);
  CHECK_THROWS_AS(build({"bad", Recipe{Recipe::Kind::frobenius, {8, 3, 2}, {}, {}}, 24}),
                  InvalidRecipe);
  CHECK_THROWS_AS(build({"bad", Recipe{Recipe::Kind::dihedral, {7}, {}, {}}, 7}), InvalidRecipe);
}

TEST_CASE("extended corpus") {
  auto ext21 = extended_corpus(21);
  int at21 = 0;
  bool has_c21 = false, has_f73 = false;
  for (const auto& e : ext21)
    if (e.order == 21) {
      ++at21;
      has_c21 |= e.name == "C21";
      has_f73 |= e.name == "F(7,3)";
    }
  CHECK(at21 == 2);
  CHECK(has_c21);
  CHECK(has_f73);

  auto ext6 = extended_corpus(6);
  CHECK(ext6.size() == 8);

  CHECK(extended_corpus(15).size() == 28);

  bool has_a5 = false;
  for (const auto& e : extended_corpus(60)) has_a5 |= e.name == "A5";
  CHECK(has_a5);
}

TEST_CASE("name parsing") {
  CHECK(entry_from_name("C12")->order == 12);
  CHECK(entry_from_name("D14")->order == 14);
  CHECK(entry_from_name("Q8")->order == 8);
  CHECK(entry_from_name("F(7,3)")->order == 21);
  CHECK(entry_from_name("C2xC3")->order == 6);
  CHECK(entry_from_name("S3xC5")->order == 30);
  CHECK_FALSE(entry_from_name("D7"));     // odd dihedral order
  CHECK_FALSE(entry_from_name("F(8,3)")); // 8 is not prime
  CHECK_FALSE(entry_from_name("nonsense"));
}

TEST_CASE("group files") {
  auto s3 = parse_group_file("perm 3\n(1 2 3)\n(1 2)\n");
  CHECK(s3.order() == 6);
  CHECK(is_isomorphic(s3, named("S3")));

  auto c2 = parse_group_file("table 2\n0 1\n1 0\n");
  CHECK(c2.order() == 2);

  // comments and blank lines
  auto with_comments = parse_group_file("# a comment\nperm 3\n\n(1 2 3)\n# another\n(1 2)\n");
  CHECK(with_comments.order() == 6);

  // identity generator line
  CHECK(parse_group_file("perm 2\n()\n").order() == 1);
}

TEST_CASE("group file errors carry positions") {
  try {
    parse_group_file("perm 3\n(1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("unclosed cycle") != std::string::npos);
  }
  try {
    parse_group_file("perm 3\n(1 5)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 4);
  }
  CHECK_THROWS_AS(parse_group_file(""), ParseError);
  CHECK_THROWS_AS(parse_group_file("perm 3\n(1 1)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("matrix 3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("table 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("table 2\n0 1\n1 2\n"), ParseError);
  // axiom failures pass through as NotAGroup
  CHECK_THROWS_AS(parse_group_file("table 2\n0 0\n1 1\n"), NotAGroup);
}

TEST_CASE("load group file from disk") {
  const std::string dir = CDG_TEST_DATA_DIR;
  auto s3 = load_group_file(dir + "/s3.grp");
  CHECK(s3.order() == 6);
  auto f21 = load_group_file(dir + "/f21.grp");
  CHECK(f21.order() == 21);
  CHECK(is_isomorphic(f21, named("F(7,3)")));
  auto c2 = load_group_file(dir + "/c2_table.grp");
  CHECK(c2.order() == 2);
  CHECK_THROWS_AS(load_group_file(dir + "/does_not_exist.grp"), Error);
}

TEST_CASE("catalog manifest json") {
  auto manifest = catalog_manifest(all_groups_up_to_15());
  REQUIRE(manifest.size() == 28);
  CHECK(manifest[0]["name"] == "C1");
  CHECK(manifest[0]["order"] == 1);
  CHECK(manifest[0]["recipe"] == "cyclic 1");
  bool found_frobenius = false;
  for (const auto& row : catalog_manifest(extended_corpus(21)))
    if (row["name"] == "F(7,3)") {
      found_frobenius = true;
      CHECK(row["recipe"] == "frobenius 7 3 2");
    }
  CHECK(found_frobenius);
}
