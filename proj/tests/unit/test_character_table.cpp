#include <doctest.h>

#include <algorithm>

#include "cdg/character_table.hpp"
#include "cdg/export.hpp"
#include "helpers.hpp"

using namespace cdg;
using cdg::testing::named;

namespace {

Cyclotomic rat(long long n, std::uint32_t e = 1) {
  return Cyclotomic::from_rational(Rational(n), e);
}

// Direct orthogonality recomputation, independent of the table's internal
// fast-path self-check.
void check_orthogonality_directly(const FiniteGroup& g, const ConjugacyData& cc,
                                  const CharacterTable& t) {
  const std::uint32_t r = t.count();
  for (std::uint32_t a = 0; a < r; ++a)
    for (std::uint32_t b = 0; b < r; ++b) {
      Cyclotomic acc = Cyclotomic::zero(t.conductor);
      for (std::uint32_t k = 0; k < r; ++k)
        acc += (t.values[a][k] * t.values[b][k].conjugate()).scaled(Rational(cc.sizes[k]));
      CHECK(acc == rat(a == b ? g.order() : 0));
    }
  for (std::uint32_t k = 0; k < r; ++k)
    for (std::uint32_t l = 0; l < r; ++l) {
      Cyclotomic acc = Cyclotomic::zero(t.conductor);
      for (std::uint32_t a = 0; a < r; ++a)
        acc += t.values[a][k] * t.values[a][l].conjugate();
      CHECK(acc == rat(k == l ? g.order() / cc.sizes[k] : 0));
    }
}

}  // namespace

TEST_CASE("dixon primes") {
  CHECK(dixon_prime(6, 6) == 7);
  CHECK(dixon_prime(24, 12) == 13);   // least p = 1 mod 12 above 2*sqrt(24)
  CHECK(dixon_prime(60, 30) == 31);
  CHECK(dixon_prime(4, 4) == 5);
  CHECK(dixon_prime(1, 1) == 3);
  CHECK(dixon_prime(21, 21) == 43);
}

TEST_CASE("class constants") {
  auto c2 = named("C2");
  auto cc2 = conjugacy_classes(c2);
  auto k2 = class_constants(c2, cc2);
  CHECK(k2.at(1, 1, 0) == 1);

  auto s3 = named("S3");
  auto cc3 = conjugacy_classes(s3);
  auto k3 = class_constants(s3, cc3);
  std::uint32_t transpositions = 0;
  for (std::uint32_t c = 0; c < cc3.count(); ++c)
    if (cc3.sizes[c] == 3) transpositions = c;
  CHECK(k3.at(transpositions, transpositions, 0) == 3);

  for (const char* name : {"S3", "Q8", "A4"}) {
    auto g = named(name);
    auto cc = conjugacy_classes(g);
    auto k = class_constants(g, cc);
    const std::uint32_t r = cc.count();
    // identity law
    for (std::uint32_t j = 0; j < r; ++j)
      for (std::uint32_t l = 0; l < r; ++l) CHECK(k.at(0, j, l) == (j == l ? 1 : 0));
    // oracle: count all factoring pairs directly
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j)
        for (std::uint32_t l = 0; l < r; ++l) {
          std::uint32_t count = 0;
          for (std::uint32_t x : cc.classes[i])
            for (std::uint32_t y : cc.classes[j])
              if (g.mult(x, y) == cc.reps[l]) ++count;
          CHECK(k.at(i, j, l) == count);
        }
    // row sums against class sizes
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j) {
        std::uint64_t total = 0;
        for (std::uint32_t l = 0; l < r; ++l)
          total += static_cast<std::uint64_t>(k.at(i, j, l)) * cc.sizes[l];
        CHECK(total == static_cast<std::uint64_t>(cc.sizes[i]) * cc.sizes[j]);
      }
    // commutativity and the inversion symmetry
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = 0; j < r; ++j)
        for (std::uint32_t l = 0; l < r; ++l) {
          CHECK(k.at(i, j, l) == k.at(j, i, l));
          CHECK(k.at(i, j, l) ==
                k.at(cc.inverse_class[j], cc.inverse_class[i], cc.inverse_class[l]));
        }
  }
}

TEST_CASE("character table of S3 matches the hand-computed table") {
  auto g = named("S3");
  auto cc = conjugacy_classes(g);
  auto t = character_table(g, cc);
  REQUIRE(t.count() == 3);
  CHECK(t.degrees == std::vector<std::uint32_t>{1, 1, 2});
  // classes: identity, 3-cycles (size 2), transpositions (size 3)
  REQUIRE(cc.sizes == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(t.values[0] == std::vector<Cyclotomic>{rat(1), rat(1), rat(1)});
  CHECK(t.values[1] == std::vector<Cyclotomic>{rat(1), rat(1), rat(-1)});
  CHECK(t.values[2] == std::vector<Cyclotomic>{rat(2), rat(-1), rat(0)});
  check_orthogonality_directly(g, cc, t);
}

TEST_CASE("character table of C4") {
  auto g = named("C4");
  auto cc = conjugacy_classes(g);
  auto t = character_table(g, cc);
  REQUIRE(t.count() == 4);
  CHECK(t.degrees == std::vector<std::uint32_t>{1, 1, 1, 1});
  auto i = Cyclotomic::root_of_unity(4, 1);
  // every row's value set is {1, i, -1, -i} or {1, -1}
  for (std::uint32_t row = 1; row < 4; ++row) {
    for (std::uint32_t k = 0; k < 4; ++k) {
      const auto& v = t.values[row][k];
      bool known = v == rat(1) || v == rat(-1) || v == i || v == -i;
      CHECK(known);
    }
  }
  // exactly two faithful rows contain i
  int with_i = 0;
  for (std::uint32_t row = 0; row < 4; ++row)
    for (std::uint32_t k = 0; k < 4; ++k)
      if (t.values[row][k] == i) {
        ++with_i;
        break;
      }
  CHECK(with_i == 2);
}

TEST_CASE("character table of A5") {
  auto g = named("A5");
  auto cc = conjugacy_classes(g);
  auto t = character_table(g, cc);
  REQUIRE(t.count() == 5);
  CHECK(t.degrees == std::vector<std::uint32_t>{1, 3, 3, 4, 5});

  // the two degree-3 rows carry (1 +- sqrt 5)/2 on the order-5 classes
  auto golden = rat(1, 5) + Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  auto golden_bar = rat(1, 5) + Cyclotomic::root_of_unity(5, 2) + Cyclotomic::root_of_unity(5, 3);
  std::vector<std::uint32_t> order5_classes;
  for (std::uint32_t k = 0; k < 5; ++k)
    if (g.element_order(cc.reps[k]) == 5) order5_classes.push_back(k);
  REQUIRE(order5_classes.size() == 2);
  for (std::uint32_t row = 1; row <= 2; ++row) {
    std::vector<Cyclotomic> pair{t.values[row][order5_classes[0]],
                                 t.values[row][order5_classes[1]]};
    bool match = (pair[0] == golden && pair[1] == golden_bar) ||
                 (pair[0] == golden_bar && pair[1] == golden);
    CHECK(match);
  }
  CHECK_FALSE(t.values[1][order5_classes[0]] == t.values[2][order5_classes[0]]);
  check_orthogonality_directly(g, cc, t);
}

TEST_CASE("degree profiles of larger groups") {
  auto degrees = [](const char* name) {
    auto g = named(name);
    return character_table(g, conjugacy_classes(g)).degrees;
  };
  CHECK(degrees("S4") == std::vector<std::uint32_t>{1, 1, 2, 3, 3});
  CHECK(degrees("S5") == std::vector<std::uint32_t>{1, 1, 4, 4, 5, 5, 6});
  CHECK(degrees("A6") == std::vector<std::uint32_t>{1, 5, 5, 8, 8, 9, 10});
  // extraspecial of order 125: 25 linear characters and 4 of degree 5
  auto es = degrees("ES+(125)");
  CHECK(std::count(es.begin(), es.end(), 1u) == 25);
  CHECK(std::count(es.begin(), es.end(), 5u) == 4);
  CHECK(es.size() == 29);
}

TEST_CASE("tables carry exact orthogonality for assorted groups") {
  for (const char* name : {"Q8", "D10", "S4", "F(7,3)", "Dic12", "ES+(27)"}) {
    auto g = named(name);
    auto cc = conjugacy_classes(g);
    auto t = character_table(g, cc);
    std::uint64_t sum = 0;
    for (auto d : t.degrees) sum += static_cast<std::uint64_t>(d) * d;
    CHECK(sum == g.order());
    CHECK(orthogonality_violation(t, g.order(), cc.inverse_class).empty());
  }
}

TEST_CASE("cyclic tables agree with the general method") {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    auto g = build(*entry_from_name(("C" + std::to_string(n)).c_str()));
    auto cc = conjugacy_classes(g);
    auto general = character_table(g, cc);
    auto direct = cyclic_character_table(n);
    REQUIRE(general.count() == direct.count());
    CHECK(general.degrees == direct.degrees);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k) CHECK(general.values[i][k] == direct.values[i][k]);
  }
}

TEST_CASE("kernels") {
  auto s3 = named("S3");
  auto cc = conjugacy_classes(s3);
  auto t = character_table(s3, cc);
  CHECK(character_kernel(t, 0, s3, cc).order() == 6);  // principal
  CHECK(character_kernel(t, 1, s3, cc).order() == 3);  // sign
  CHECK(character_kernel(t, 2, s3, cc).order() == 1);  // faithful

  auto a4 = named("A4");
  auto cca = conjugacy_classes(a4);
  auto ta = character_table(a4, cca);
  CHECK(character_kernel(ta, 3, a4, cca).order() == 1);  // degree 3 row is faithful

  // kernels are normal, and the intersection of all kernels is trivial
  for (const char* name : {"S4", "Q8", "D10"}) {
    auto g = named(name);
    auto ccg = conjugacy_classes(g);
    auto tg = character_table(g, ccg);
    std::vector<std::uint32_t> meet;
    for (std::uint32_t x = 0; x < g.order(); ++x) meet.push_back(x);
    for (std::uint32_t row = 0; row < tg.count(); ++row) {
      auto ker = character_kernel(tg, row, g, ccg);
      for (std::uint32_t s : g.generator_indices())
        for (std::uint32_t x : ker.members)
          CHECK(ker.contains(g.mult(g.mult(g.inv(s), x), s)));
      std::vector<std::uint32_t> next;
      std::set_intersection(meet.begin(), meet.end(), ker.members.begin(), ker.members.end(),
                            std::back_inserter(next));
      meet = std::move(next);
    }
    CHECK(meet == std::vector<std::uint32_t>{0});
  }
}

TEST_CASE("restriction constituents") {
  auto s3 = named("S3");
  auto cc = conjugacy_classes(s3);
  auto t = character_table(s3, cc);
  auto a3 = subgroup_closure(s3, {1});
  auto sub = subgroup_characters(s3, a3);

  // the degree-2 character restricts to the two nonprincipal characters of C3
  auto parts = restriction_constituents(t, 2, s3, cc, sub);
  REQUIRE(parts.size() == 2);
  for (auto [row, mult] : parts) {
    CHECK(mult == 1);
    CHECK(row != 0);
  }

  // restriction to the whole group returns the character itself
  auto whole = subgroup_characters(s3, whole_group(s3));
  for (std::uint32_t row = 0; row < t.count(); ++row) {
    auto self = restriction_constituents(t, row, s3, cc, whole);
    REQUIRE(self.size() == 1);
    CHECK(self[0].second == 1);
    CHECK(whole.table.degrees[self[0].first] == t.degrees[row]);
  }

  // degree-3 character of A4 restricted to V4 splits into the three
  // nonprincipal linear characters
  auto a4 = named("A4");
  auto cca = conjugacy_classes(a4);
  auto ta = character_table(a4, cca);
  auto v4 = normal_subgroups(a4, cca)[1];
  REQUIRE(v4.order() == 4);
  auto subv = subgroup_characters(a4, v4);
  auto parts3 = restriction_constituents(ta, 3, a4, cca, subv);
  REQUIRE(parts3.size() == 3);
  for (auto [row, mult] : parts3) {
    CHECK(mult == 1);
    CHECK(row != 0);
  }
}

TEST_CASE("table json export") {
  auto g = named("S3");
  auto cc = conjugacy_classes(g);
  auto t = character_table(g, cc);
  auto j = table_to_json(t, "S3");
  CHECK(j["group"] == "S3");
  CHECK(j["order"] == 6);
  CHECK(j["conductor"] == 6);
  REQUIRE(j["irreducibles"].size() == 3);
  CHECK(j["irreducibles"][2]["degree"] == 2);
  // coefficients render as exact strings
  CHECK(j["irreducibles"][0]["values"][0][0] == "1");
  // deterministic double export
  CHECK(table_to_json(t, "S3").dump() == j.dump());
}
