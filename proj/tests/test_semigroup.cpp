#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "valsemi/obstruction.hpp"
#include "valsemi/semigroup.hpp"

using namespace valsemi;

namespace {

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace

TEST_CASE("realize_generators") {
  auto spec = GeneratorSpec::explicit_list(rationals({"2", "3"}));
  CHECK(spec.realize(Rational(10)) == rationals({"2", "3"}));

  auto ex1 = example1_generators(2);
  CHECK(ex1.realize(Rational(3)) ==
        rationals({"1", "3/2", "2", "13/6", "7/3", "5/2", "8/3", "17/6"}));

  auto tall = GeneratorSpec::explicit_list(rationals({"5"}));
  CHECK_THROWS_AS(tall.realize(Rational(3)), EmptyGeneratorsError);
}

TEST_CASE("profile horizon is explicit data") {
  auto ex1 = example1_generators(2);
  CHECK_THROWS_AS(ex1.realize(Rational::parse("7/2")), ProfileHorizonError);
  CHECK_THROWS_AS(ex1.realize(Rational(4)), ProfileHorizonError);
}

TEST_CASE("enumerate_up_to basic semigroups") {
  auto s23 = enumerate_up_to(GeneratorSpec::explicit_list(rationals({"2", "3"})), Rational(9));
  CHECK(s23.elements == rationals({"2", "3", "4", "5", "6", "7", "8", "9"}));
  CHECK(s23.s0 == Rational(2));
  CHECK(s23.complete);

  auto nat = enumerate_up_to(GeneratorSpec::explicit_list(rationals({"1"})), Rational(4));
  CHECK(nat.elements == rationals({"1", "2", "3", "4"}));
}

TEST_CASE("enumerate_up_to on the block profile") {
  // the eight generators below 3 plus the sums 3/2+3/2 = 1+2 = 3
  auto u = enumerate_up_to(example1_generators(2), Rational(3));
  CHECK(u.s0 == Rational(1));
  CHECK(u.elements ==
        rationals({"1", "3/2", "2", "13/6", "7/3", "5/2", "8/3", "17/6", "3"}));
  CHECK(count_below(u, Rational(3)) == 8);
}

TEST_CASE("count_below") {
  auto s = enumerate_up_to(GeneratorSpec::explicit_list(rationals({"2", "3"})), Rational(9));
  CHECK(count_below(s, Rational(6)) == 4);  // 2, 3, 4, 5
  CHECK(count_below(s, s.s0) == 0);
  CHECK(count_below(s, Rational(9)) == 7);
  CHECK_THROWS_AS(count_below(s, Rational(10)), BoundTooSmallError);
}

TEST_CASE("contains") {
  auto u = enumerate_up_to(example1_generators(2), Rational(3));
  CHECK(contains(u, Rational::parse("13/6")));
  CHECK_FALSE(contains(u, Rational::parse("4/3")));
  auto s = enumerate_up_to(GeneratorSpec::explicit_list(rationals({"2", "3"})), Rational(9));
  CHECK_FALSE(contains(s, Rational(1)));
  CHECK_THROWS_AS(contains(s, Rational(11)), BoundTooSmallError);
}

TEST_CASE("sumset_r") {
  CHECK(sumset_r(rationals({"1", "3/2"}), 2, Rational(3)) == rationals({"2", "5/2", "3"}));
  CHECK(sumset_r(rationals({"2", "3"}), 1, Rational(10)) == rationals({"2", "3"}));
  CHECK(sumset_r(rationals({"2", "3"}), 3, Rational(8)) == rationals({"6", "7", "8"}));
}

TEST_CASE("oracle equivalence on random explicit specs") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> small(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> gens;
    int k = count(rng);
    for (int i = 0; i < k; ++i) gens.emplace_back(BigInt(small(rng)), BigInt(small(rng)));
    Rational bound{BigInt(small(rng) % 10 + 1)};
    std::vector<Rational> usable;
    for (const auto& g : gens)
      if (g <= bound) usable.push_back(g);
    if (usable.empty()) continue;

    auto s = enumerate_up_to(GeneratorSpec::explicit_list(gens), bound);
    CHECK(s.elements == oracles::sumset_union(usable, bound));
  }
}

TEST_CASE("elements strictly increase and are closed under bounded addition") {
  auto u = enumerate_up_to(example1_generators(3), Rational(4));
  for (std::size_t i = 1; i < u.elements.size(); ++i) CHECK(u.elements[i - 1] < u.elements[i]);
  for (const auto& x : u.elements)
    for (const auto& y : u.elements) {
      Rational sum = x + y;
      if (sum <= u.bound) CHECK(contains(u, sum));
    }
}

TEST_CASE("count_below is nondecreasing") {
  auto u = enumerate_up_to(example1_generators(3), Rational(4));
  BigNat prev = 0;
  for (Rational x(1); x <= u.bound; x = x + Rational::parse("1/3")) {
    BigNat c = count_below(u, x);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("monotone extension: longer enumeration has the shorter as prefix") {
  auto spec = GeneratorSpec::explicit_list(rationals({"2", "3", "7/2"}));
  auto small = enumerate_up_to(spec, Rational(9));
  auto large = enumerate_up_to(spec, Rational(14));
  REQUIRE(large.elements.size() >= small.elements.size());
  for (std::size_t i = 0; i < small.elements.size(); ++i)
    CHECK(small.elements[i] == large.elements[i]);
}

TEST_CASE("scaling equivariance") {
  auto spec = GeneratorSpec::explicit_list(rationals({"2", "3", "7/2"}));
  auto base = enumerate_up_to(spec, Rational(9));
  for (const char* ct : {"1/2", "3", "7/5"}) {
    Rational c = Rational::parse(ct);
    auto scaled = enumerate_up_to(spec.scaled(c), Rational(9) * c);
    REQUIRE(scaled.elements.size() == base.elements.size());
    for (std::size_t i = 0; i < base.elements.size(); ++i)
      CHECK(scaled.elements[i] == base.elements[i] * c);
    CHECK(count_below(scaled, Rational(6) * c) == count_below(base, Rational(6)));
  }
}

TEST_CASE("element budget") {
  EnumerateOptions options;
  options.budget = 10;
  CHECK_THROWS_AS(
      enumerate_up_to(GeneratorSpec::explicit_list(rationals({"1"})), Rational(100), options),
      BudgetExceededError);
}

TEST_CASE("stop predicate cuts the stream") {
  EnumerateOptions options;
  options.stop = [](const Rational&, std::size_t emitted) { return emitted >= 3; };
  auto s = enumerate_up_to(GeneratorSpec::explicit_list(rationals({"1"})), Rational(100), options);
  CHECK_FALSE(s.complete);
  CHECK(s.elements == rationals({"1", "2", "3"}));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(GeneratorSpec::explicit_list({}), EmptyGeneratorsError);
  CHECK_THROWS(GeneratorSpec::explicit_list(rationals({"0", "2"})));
  CHECK_THROWS(GeneratorSpec::explicit_list(rationals({"-1"})));
}
