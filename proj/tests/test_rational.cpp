#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "valsemi/rational.hpp"

using valsemi::BigInt;
using valsemi::BigNat;
using valsemi::Rational;

TEST_CASE("binomial small values") {
  CHECK(valsemi::binomial(4, 2) == 6);
  CHECK(valsemi::binomial(5, 0) == 1);
  CHECK(valsemi::binomial(0, 0) == 1);
  CHECK(valsemi::binomial(3, 7) == 0);
  // frozen from the factorial oracle
  CHECK(valsemi::binomial(10, 5) == 252);
}

TEST_CASE("binomial agrees with the factorial oracle") {
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(valsemi::binomial(n, k) == oracles::factorial_binomial(n, k));
}

TEST_CASE("Pascal identity and symmetry up to n = 40") {
  for (unsigned n = 1; n <= 40; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(valsemi::binomial(n, k) ==
            valsemi::binomial(n - 1, k - 1) + valsemi::binomial(n - 1, k));
      CHECK(valsemi::binomial(n, k) == valsemi::binomial(n, n - k));
    }
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational::parse("1/2") + Rational::parse("1/3") == Rational::parse("5/6"));
  CHECK(Rational::parse("13/6") < Rational::parse("7/3"));
  CHECK(Rational::parse("3/2") * BigNat(4) == Rational(6));
  CHECK(Rational(1) - Rational::parse("1/3") == Rational::parse("2/3"));
  CHECK(Rational::parse("3/2") / Rational::parse("1/2") == Rational(3));
}

TEST_CASE("canonical form") {
  Rational q(BigInt(4), BigInt(-6));
  CHECK(q.num() == -2);
  CHECK(q.den() == 3);
  CHECK(q.str() == "-2/3");
  CHECK(Rational(BigInt(0), BigInt(7)).str() == "0");
  // re-reducing a result is a fixpoint
  Rational r = Rational::parse("5/6") + Rational::parse("1/6");
  CHECK(Rational(r.num(), r.den()) == r);
  CHECK(r.str() == "1");
}

TEST_CASE("parse accepts both text forms and rejects garbage") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/2").num() == -3);
  CHECK(Rational::parse("+2/4") == Rational::parse("1/2"));
  CHECK_THROWS_AS(Rational::parse(""), valsemi::ParseError);
  CHECK_THROWS_AS(Rational::parse("3/"), valsemi::ParseError);
  CHECK_THROWS_AS(Rational::parse("/2"), valsemi::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), valsemi::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), valsemi::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), valsemi::ParseError);
}

TEST_CASE("print/parse round trip on random rationals") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-500, 500);
  std::uniform_int_distribution<int> den(1, 500);
  for (int i = 0; i < 500; ++i) {
    Rational q(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(Rational::parse(q.str()) == q);
  }
}

TEST_CASE("order agrees with cross multiplication") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-200, 200);
  std::uniform_int_distribution<int> den(1, 60);
  for (int i = 0; i < 500; ++i) {
    Rational a(BigInt(num(rng)), BigInt(den(rng)));
    Rational b(BigInt(num(rng)), BigInt(den(rng)));
    bool lt = a.num() * b.den() < b.num() * a.den();
    CHECK((a < b) == lt);
  }
}

TEST_CASE("hashing respects canonical equality") {
  std::unordered_set<Rational> values;
  values.insert(Rational::parse("2/4"));
  values.insert(Rational::parse("1/2"));
  values.insert(Rational::parse("3/6"));
  CHECK(values.size() == 1);
}

TEST_CASE("floor") {
  CHECK(Rational::parse("7/3").floor() == 2);
  CHECK(Rational::parse("-7/3").floor() == -3);
  CHECK(Rational(5).floor() == 5);
}
