#include <doctest.h>

#include "cdg/cyclotomic.hpp"

using namespace cdg;

namespace {

Cyclotomic zeta(std::uint32_t e, std::uint64_t k) { return Cyclotomic::root_of_unity(e, k); }
Cyclotomic rat(long long n, long long d = 1, std::uint32_t e = 1) {
  return Cyclotomic::from_rational(Rational(n, d), e);
}

// Deterministic sample values of mixed conductors for property checks.
std::vector<Cyclotomic> samples() {
  std::vector<Cyclotomic> out;
  std::uint64_t state = 12345;
  auto next = [&]() { return state = state * 6364136223846793005ull + 1442695040888963407ull; };
  for (std::uint32_t e : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 15u}) {
    for (int i = 0; i < 3; ++i) {
      Cyclotomic v = Cyclotomic::zero(e);
      for (int t = 0; t < 3; ++t) {
        long long num = static_cast<long long>(next() % 11) - 5;
        long long den = 1 + static_cast<long long>(next() % 4);
        v += zeta(e, next() % e).scaled(Rational(num, den));
      }
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK((Rational(1) / Rational(1, 7)) == Rational(7));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticOverflow);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(INT64_MAX), ArithmeticOverflow);
}

TEST_CASE("roots of unity") {
  CHECK(zeta(4, 1) * zeta(4, 1) == rat(-1));
  CHECK(zeta(6, 3) == rat(-1));
  CHECK((rat(1, 1, 3) + zeta(3, 1) + zeta(3, 2)).is_zero());
  // full vanishing sum for a composite conductor
  Cyclotomic s = Cyclotomic::zero(12);
  for (int k = 0; k < 12; ++k) s += zeta(12, k);
  CHECK(s.is_zero());
  // power periodicity
  CHECK(zeta(5, 7) == zeta(5, 2));
  // the table of all roots matches individual construction
  auto roots = Cyclotomic::all_roots_of_unity(20);
  for (std::uint32_t k = 0; k < 20; ++k) CHECK(roots[k] == zeta(20, k));
}

TEST_CASE("golden ratio identity") {
  // (1 + sqrt 5)/2 expressed through fifth roots of unity
  auto golden = rat(1, 1, 5) + zeta(5, 1) + zeta(5, 4);
  CHECK(golden * golden - golden - rat(1, 1, 5) == Cyclotomic::zero(5));
  CHECK(golden.conjugate() == golden);  // real value
  CHECK(golden.minimal_conductor() == 5);
}

TEST_CASE("associativity and distributivity on sampled values") {
  auto vals = samples();
  for (std::size_t i = 0; i + 2 < vals.size(); i += 3) {
    const auto &x = vals[i], &y = vals[i + 1], &z = vals[i + 2];
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("norms are fixed by conjugation") {
  for (const auto& x : samples()) {
    auto norm = x * x.conjugate();
    CHECK(norm.conjugate() == norm);
  }
}

TEST_CASE("canonicalization is path independent") {
  // the same value assembled in different orders has identical terms
  auto a = (zeta(8, 1) + zeta(8, 3)) + zeta(8, 5);
  auto b = zeta(8, 5) + (zeta(8, 3) + zeta(8, 1));
  CHECK(a == b);
  CHECK(a.terms() == b.terms());
  // zeta_8 + zeta_8^5 = 0
  CHECK((zeta(8, 1) + zeta(8, 5)).is_zero());
}

TEST_CASE("galois maps are field automorphisms") {
  for (std::uint32_t k : {1u, 5u, 7u, 11u}) {
    auto x = zeta(12, 1) + rat(1, 2, 12);
    auto y = zeta(12, 7).scaled(Rational(3)) - rat(2, 1, 12);
    CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
    CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
  }
  CHECK_THROWS_AS(zeta(12, 1).galois(3), Error);
}

TEST_CASE("embedding and conductor reduction") {
  CHECK(zeta(3, 1).embedded(6) == zeta(6, 2));
  CHECK(zeta(3, 1).embedded(12) == zeta(12, 4));
  // embedding preserves arithmetic
  auto v = zeta(4, 1) + rat(1, 1, 4);
  CHECK(v.embedded(12) * v.embedded(12) == (v * v).embedded(12));
  // minimal conductor detection and rewriting
  auto w = zeta(12, 4);  // actually lives in Q(zeta_3)
  CHECK(w.minimal_conductor() == 3);
  CHECK(w.to_conductor(3) == zeta(3, 1));
  CHECK(rat(5, 2, 12).minimal_conductor() == 1);
  CHECK_THROWS_AS(zeta(12, 1).to_conductor(3), Error);
}

TEST_CASE("comparison is a strict total order on equal conductors") {
  auto vals = samples();
  for (const auto& x : vals)
    for (const auto& y : vals) {
      if (x.conductor() != y.conductor()) continue;
      int xy = x.compare(y), yx = y.compare(x);
      CHECK(xy == -yx);
      CHECK((xy == 0) == (x == y));
    }
}

TEST_CASE("string rendering") {
  CHECK(Cyclotomic::zero(6).to_string() == "0");
  CHECK(rat(-3, 2, 4).to_string() == "-3/2");
  CHECK(zeta(5, 1).to_string() == "z5");
  CHECK((zeta(8, 3) - zeta(8, 1)).to_string() == "-z8+z8^3");
}
