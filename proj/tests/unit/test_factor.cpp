#include "doctest.h"
#include "oracles.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/monoid.hpp"

using namespace puiseux;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (auto s : items) out.push_back(q(s));
  return out;
}

std::set<std::map<Rational, std::uint64_t>> as_maps(const std::vector<Factorization>& fs) {
  std::set<std::map<Rational, std::uint64_t>> out;
  for (const auto& f : fs) {
    std::map<Rational, std::uint64_t> m;
    for (const auto& [a, c] : f.counts()) m[a] = c.get_ui();
    out.insert(m);
  }
  return out;
}

LengthSet lengths(std::initializer_list<int> v) {
  LengthSet l;
  for (int x : v) l.insert(x);
  return l;
}

}  // namespace

TEST_CASE("factorizations of small elements") {
  const auto m = PuiseuxSpec::finite(qs({"2", "3"}));
  const auto z6 = factorizations(m, Rational(6));
  REQUIRE(z6.size() == 2);
  CHECK(as_maps(z6) == std::set<std::map<Rational, std::uint64_t>>{{{Rational(2), 3}}, {{Rational(3), 2}}});

  const auto z0 = factorizations(m, Rational(0));
  REQUIRE(z0.size() == 1);
  CHECK(z0.front().empty());

  const auto z4 = factorizations(PuiseuxSpec::finite(qs({"3/2", "5/2"})), Rational(4));
  CHECK(as_maps(z4) == std::set<std::map<Rational, std::uint64_t>>{{{q("3/2"), 1}, {q("5/2"), 1}}});
  CHECK(factorizations(m, Rational(1)).empty());
}

TEST_CASE("length sets and elasticity") {
  CHECK(length_set(PuiseuxSpec::finite(qs({"2", "3"})), Rational(6)) == lengths({2, 3}));
  CHECK(length_set(PuiseuxSpec::finite(qs({"2", "3"})), Rational(0)) == lengths({0}));
  CHECK(length_set(PuiseuxSpec::finite(qs({"3", "5"})), Rational(15)) == lengths({3, 5}));
  CHECK(elasticity(PuiseuxSpec::finite(qs({"2", "3"})), Rational(6)) == q("3/2"));
  CHECK(elasticity(PuiseuxSpec::finite(qs({"2", "3"})), Rational(2)) == Rational(1));
  CHECK(elasticity(PuiseuxSpec::finite(qs({"3", "5"})), Rational(15)) == q("5/3"));
  CHECK_THROWS_AS(elasticity(PuiseuxSpec::finite(qs({"2", "3"})), Rational(1)), DomainError);
  CHECK_THROWS_AS(elasticity(PuiseuxSpec::finite(qs({"2", "3"})), Rational(0)), DomainError);
}

TEST_CASE("infinite families must be truncated first") {
  const auto fam = PuiseuxSpec::geometric(q("3/2"));
  CHECK_THROWS_AS(factorizations(fam, Rational(3)), DomainError);
  CHECK_NOTHROW(factorizations(truncate(fam, 4), Rational(3)));
}

TEST_CASE("half-factoriality sampling") {
  const auto r23 = half_factorial_up_to(PuiseuxSpec::finite(qs({"2", "3"})), Rational(10));
  CHECK_FALSE(r23.half_factorial);
  REQUIRE(r23.counterexample);
  CHECK(*r23.counterexample == Rational(6));
  CHECK(r23.counterexample_lengths == lengths({2, 3}));
  CHECK(half_factorial_up_to(PuiseuxSpec::finite(qs({"1"})), Rational(10)).half_factorial);
  CHECK(half_factorial_up_to(PuiseuxSpec::finite(qs({"2"})), Rational(10)).half_factorial);
  // Rescaling keeps half-factoriality.
  CHECK(half_factorial_up_to(PuiseuxSpec::finite(qs({"1/3"})), Rational(10)).half_factorial);
  const auto frac = half_factorial_up_to(PuiseuxSpec::finite(qs({"3/2", "5/2"})), Rational(20));
  CHECK_FALSE(frac.half_factorial);
  CHECK(*frac.counterexample == q("15/2"));
  CHECK_THROWS_AS(half_factorial_up_to(PuiseuxSpec::finite(qs({"2"})), Rational(0)), DomainError);
}

TEST_CASE("property: factorizations match exhaustive enumeration") {
  auto r = oracle::rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Rational> gens;
    const std::uint64_t den = oracle::uniform(r, 1, 4);
    const std::size_t k = oracle::uniform(r, 1, 4);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(Rational::normalize(oracle::uniform(r, 1, 30), den));
    const auto spec = PuiseuxSpec::finite(gens);
    const auto atoms = minimal_generators(gens);
    for (int s = 0; s < 5; ++s) {
      const Rational x = Rational::normalize(oracle::uniform(r, 0, 200), den);
      const auto got = factorizations(spec, x);
      CHECK(as_maps(got) == oracle::factorizations(atoms, x));
      for (const auto& f : got) CHECK(f.evaluate() == x);
      // Returned in canonical order.
      CHECK(std::is_sorted(got.begin(), got.end()));
      // Length bound from the smallest atom.
      for (const auto& f : got) CHECK(Rational(f.length()) * atoms.front() <= x);
    }
  }
}

TEST_CASE("property: half-factoriality agrees with per-element length sets") {
  auto r = oracle::rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> gens;
    const std::size_t k = oracle::uniform(r, 1, 3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(Rational(oracle::uniform(r, 1, 12)));
    const auto spec = PuiseuxSpec::finite(gens);
    const auto report = half_factorial_up_to(spec, Rational(40));
    std::optional<Rational> first;
    for (std::uint64_t x = 1; x <= 40 && !first; ++x) {
      if (length_set(spec, Rational(x)).size() > 1) first = Rational(x);
    }
    CHECK(report.half_factorial == !first.has_value());
    if (first) CHECK(*report.counterexample == *first);
  }
}

TEST_CASE("property: scaling is a bijection on factorizations") {
  auto r = oracle::rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> gens;
    const std::size_t k = oracle::uniform(r, 1, 3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(Rational::normalize(oracle::uniform(r, 1, 15), oracle::uniform(r, 1, 3)));
    const Rational scale = Rational::normalize(oracle::uniform(r, 1, 9), oracle::uniform(r, 1, 9));
    std::vector<Rational> scaled;
    for (const auto& g : gens) scaled.push_back(scale * g);
    const Rational x = Rational::normalize(oracle::uniform(r, 0, 60), 6);
    const auto base = factorizations(PuiseuxSpec::finite(gens), x);
    const auto image = factorizations(PuiseuxSpec::finite(scaled), scale * x);
    REQUIRE(base.size() == image.size());
    std::set<std::map<Rational, std::uint64_t>> mapped;
    for (const auto& f : base) {
      std::map<Rational, std::uint64_t> m;
      for (const auto& [a, c] : f.counts()) m[scale * a] = c.get_ui();
      mapped.insert(m);
    }
    CHECK(mapped == as_maps(image));
  }
}
