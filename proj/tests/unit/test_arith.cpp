#include "doctest.h"
#include "oracles.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/rational.hpp"

using puiseux::DomainError;
using puiseux::Integer;
using puiseux::Rational;
using puiseux::Valuation;

namespace {
Rational q(const char* s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("normalize reduces and rejects zero denominators") {
  CHECK(Rational::normalize(6, 4) == q("3/2"));
  CHECK(Rational::normalize(35, 10).to_string() == "7/2");
  const Rational zero = Rational::normalize(0, 7);
  CHECK(zero.num() == 0);
  CHECK(zero.den() == 1);
  CHECK(zero.to_string() == "0");
  CHECK_THROWS_AS(Rational::normalize(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::normalize(-1, 2), DomainError);
}

TEST_CASE("numerator and denominator") {
  CHECK(puiseux::numerator(q("3/2")) == 3);
  CHECK(puiseux::denominator(q("3/2")) == 2);
  CHECK(puiseux::numerator(Rational(7)) == 7);
  CHECK(puiseux::denominator(Rational(7)) == 1);
  CHECK(puiseux::numerator(Rational(0)) == 0);
  CHECK(puiseux::denominator(Rational(0)) == 1);
}

TEST_CASE("parsing accepts exact forms only") {
  CHECK(q("10/4") == q("5/2"));
  CHECK(q("12") == Rational(12));
  CHECK(q(" 3/2 ") == Rational::normalize(3, 2));
  CHECK_THROWS_AS(q("1.5"), DomainError);
  CHECK_THROWS_AS(q("1e3"), DomainError);
  CHECK_THROWS_AS(q("-1/2"), DomainError);
  CHECK_THROWS_AS(q("1/0"), DomainError);
  CHECK_THROWS_AS(q("abc"), DomainError);
  CHECK_THROWS_AS(q(""), DomainError);
}

TEST_CASE("arithmetic stays in the nonnegative rationals") {
  CHECK(q("1/3") + q("1/5") == q("8/15"));
  CHECK(q("3/2") * q("2/3") == Rational(1));
  CHECK(q("3/2") / q("3/4") == Rational(2));
  CHECK(q("5/2") - q("1/2") == Rational(2));
  CHECK_THROWS_AS(q("1/2") - q("3/2"), DomainError);
  CHECK_THROWS_AS(q("1/2") / Rational(0), DomainError);
  CHECK_FALSE(puiseux::difference(q("1/2"), q("3/2")).has_value());
  CHECK(*puiseux::difference(q("3/2"), q("1/2")) == Rational(1));
  CHECK(puiseux::pow(q("3/2"), 3) == q("27/8"));
  CHECK(puiseux::pow(q("3/2"), -2) == q("4/9"));
  CHECK(puiseux::pow(q("3/2"), 0) == Rational(1));
  CHECK(q("2/3") < q("3/4"));
}

TEST_CASE("p-adic valuations") {
  CHECK(puiseux::padic_valuation(Integer(2), q("3/8")) == Valuation::finite(-3));
  CHECK(puiseux::padic_valuation(Integer(3), q("9/5")) == Valuation::finite(2));
  CHECK(puiseux::padic_valuation(Integer(5), Rational(0)) == Valuation::infinity());
  CHECK(puiseux::padic_valuation(Integer(7), q("3/2")) == Valuation::finite(0));
  CHECK_THROWS_AS(puiseux::padic_valuation(Integer(4), q("3/2")), DomainError);
  CHECK_THROWS_AS(puiseux::padic_valuation(Integer(1), q("3/2")), DomainError);
}

TEST_CASE("big integers do not overflow") {
  const Rational big = puiseux::pow(Rational(3), 100) / puiseux::pow(Rational(2), 70);
  CHECK(puiseux::padic_valuation(Integer(3), big) == Valuation::finite(100));
  CHECK(puiseux::padic_valuation(Integer(2), big) == Valuation::finite(-70));
}

TEST_CASE("property: valuation is additive on products") {
  auto r = oracle::rng(11);
  const std::vector<Integer> primes{2, 3, 5, 7, 11};
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = Rational::normalize(oracle::uniform(r, 1, 5000), oracle::uniform(r, 1, 5000));
    const Rational b = Rational::normalize(oracle::uniform(r, 1, 5000), oracle::uniform(r, 1, 5000));
    for (const auto& p : primes) {
      CHECK(puiseux::padic_valuation(p, a * b) ==
            puiseux::padic_valuation(p, a) + puiseux::padic_valuation(p, b));
    }
  }
}

TEST_CASE("property: reduced form and scaling round trip") {
  auto r = oracle::rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = Rational::normalize(oracle::uniform(r, 0, 100000), oracle::uniform(r, 1, 100000));
    CHECK(puiseux::gcd(x.num(), x.den()) == 1);
    CHECK(Rational::normalize(x.num(), x.den()) == x);
    const Integer k = oracle::uniform(r, 1, 1000);
    CHECK(Rational::normalize(x.num() * k, x.den() * k) == x);
    CHECK(Rational::parse(x.to_string()) == x);
  }
}
