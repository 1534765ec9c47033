#include "doctest.h"
#include "oracles.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/monoid.hpp"

using namespace puiseux;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (auto s : items) out.push_back(q(s));
  return out;
}

/// Membership by sieving the cleared lattice.
bool sieve_member(const std::vector<Rational>& gens, const Rational& x) {
  Integer l = x.den();
  for (const auto& g : gens) l = lcm(l, g.den());
  std::vector<std::uint64_t> w;
  for (const auto& g : gens) w.push_back(Integer(g.num() * (l / g.den())).get_ui());
  const std::uint64_t t = Integer(x.num() * (l / x.den())).get_ui();
  return oracle::sieve(w, t)[t];
}

std::vector<Rational> random_gens(std::mt19937_64& r, std::size_t max_count, std::uint64_t max_num,
                                  std::uint64_t max_den) {
  std::vector<Rational> g;
  const std::size_t k = oracle::uniform(r, 1, max_count);
  for (std::size_t i = 0; i < k; ++i) {
    g.push_back(Rational::normalize(oracle::uniform(r, 1, max_num), oracle::uniform(r, 1, max_den)));
  }
  return g;
}

}  // namespace

TEST_CASE("truncations expand the canonical enumeration") {
  CHECK(truncation_generators(PuiseuxSpec::geometric(q("3/2")), 3) == qs({"3/2", "9/4", "27/8"}));
  CHECK(truncation_generators(PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::Odd), 3) ==
        qs({"1/3", "1/5", "1/7"}));
  const auto pc = PuiseuxSpec::primary_construction(2, 3, Polynomial::parse("n^2"), {NumericalMonoid{3, 5}});
  CHECK(truncation_generators(pc, 2) == qs({"9/2", "15/2", "243/4", "405/4"}));
  CHECK(truncation_generators(PuiseuxSpec::biinfinite_geometric(q("3/2")), 1) == qs({"2/3", "1", "3/2"}));
  CHECK(truncate(PuiseuxSpec::geometric(q("3/2")), 2) == PuiseuxSpec::finite(qs({"3/2", "9/4"})));
  CHECK_THROWS_AS(truncation_generators(PuiseuxSpec::geometric(q("3/2")), 0), DomainError);
}

TEST_CASE("spec construction checks hypotheses") {
  CHECK_THROWS_AS(PuiseuxSpec::finite({}), DomainError);
  CHECK_THROWS_AS(PuiseuxSpec::finite(qs({"0", "1"})), DomainError);
  CHECK_THROWS_AS(PuiseuxSpec::geometric(Rational(0)), DomainError);
  CHECK_THROWS_AS(PuiseuxSpec::primary_construction(2, 4, Polynomial::parse("n^2"), {NumericalMonoid{3, 5}}),
                  DomainError);
  CHECK_THROWS_AS(PuiseuxSpec::primary_construction(2, 3, Polynomial::parse("n^2+1"), {NumericalMonoid{3, 5}}),
                  DomainError);
  // S_2 must sit inside S_1.
  CHECK_THROWS_AS(
      PuiseuxSpec::primary_construction(2, 3, Polynomial::parse("n^2"), {NumericalMonoid{3, 5}, NumericalMonoid{2, 3}}),
      DomainError);
  CHECK_NOTHROW(
      PuiseuxSpec::primary_construction(2, 3, Polynomial::parse("n^2"), {NumericalMonoid{2, 3}, NumericalMonoid{3, 5}}));
}

TEST_CASE("membership examples") {
  const auto m = PuiseuxSpec::finite(qs({"3/2", "5/2"}));
  const auto yes = member(m, Rational(4));
  REQUIRE(yes.yes());
  CHECK(yes.witness.evaluate() == Rational(4));
  CHECK(member(m, q("1/2")).no());
  CHECK(member(m, Rational(0)).yes());

  const auto half = member(PuiseuxSpec::geometric(q("1/2")), q("3/4"), 4);
  REQUIRE(half.yes());
  CHECK(half.witness.evaluate() == q("3/4"));

  // 1/5 has a denominator prime that no power of 2/3 carries.
  CHECK(member(PuiseuxSpec::geometric(q("2/3")), q("1/5")).no());
  CHECK(member(PuiseuxSpec::geometric(q("5/2")), q("15/2")).yes());
  CHECK(member(PuiseuxSpec::geometric(q("5/2")), q("7/2")).no());
}

TEST_CASE("undecided family queries are reported as unknown") {
  // 1/3^5 needs powers beyond the searched truncations but passes exclusion.
  const auto a = member(PuiseuxSpec::geometric(q("2/3")), q("1/243"), 2);
  CHECK(a.unknown());
  CHECK(a.depth_searched == 2);
}

TEST_CASE("property: finite membership agrees with a lattice sieve") {
  auto r = oracle::rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gens = random_gens(r, 4, 12, 6);
    const auto spec = PuiseuxSpec::finite(gens);
    for (int k = 0; k < 10; ++k) {
      const Rational x = Rational::normalize(oracle::uniform(r, 0, 60), oracle::uniform(r, 1, 6));
      const auto a = member(spec, x);
      CHECK_FALSE(a.unknown());
      CHECK(a.yes() == sieve_member(gens, x));
      if (a.yes()) CHECK(a.witness.evaluate() == x);
    }
  }
}

TEST_CASE("property: geometric membership with r > 1 agrees with the powers below x") {
  auto r = oracle::rng(32);
  // The sieve clears d(r)^k for every power below x, so slow ratios get a smaller range.
  const std::vector<std::pair<const char*, std::uint64_t>> cases{{"3/2", 400}, {"5/2", 400}, {"7/3", 400}, {"4/3", 30}};
  for (const auto& [ratio, top] : cases) {
    const Rational rr = q(ratio);
    const auto spec = PuiseuxSpec::geometric(rr);
    for (int k = 0; k < 60; ++k) {
      const Rational x = Rational::normalize(oracle::uniform(r, 1, top), Integer(1) << oracle::uniform(r, 0, 4));
      std::vector<Rational> below;
      for (Rational p = rr; p <= x; p = p * rr) below.push_back(p);
      const bool expected = !below.empty() && sieve_member(below, x);
      const auto a = member(spec, x);
      CHECK(a.yes() == expected);
      CHECK_FALSE(a.unknown());
    }
  }
}

TEST_CASE("property: prime families decide membership exactly") {
  auto r = oracle::rng(33);
  const std::vector<std::uint64_t> small_primes{2, 3, 5, 7, 11, 13};
  for (auto form : {PrimeForm::Reciprocal, PrimeForm::PredecessorOverPrime, PrimeForm::SquarePlusOneOverPrime}) {
    for (auto filter : {PrimeFilter::All, PrimeFilter::Odd}) {
      const PrimeReciprocal family{form, filter};
      const auto spec = PuiseuxSpec::prime_reciprocal(form, filter);
      for (int k = 0; k < 80; ++k) {
        // Denominator built from small primes, possibly with a square.
        Integer den = 1;
        for (auto p : small_primes) {
          const auto e = oracle::uniform(r, 0, 5);
          if (e == 1) den *= p;
          if (e == 2 && p <= 3) den *= p * p;
        }
        const Rational x = Rational::normalize(oracle::uniform(r, 0, 4 * den.get_ui()), den);
        // Reference: generators at the small primes plus the integers n(g(p)).
        std::vector<Rational> gens;
        for (auto p : small_primes) {
          if (family.admissible(p)) gens.push_back(family.generator_for(p));
        }
        // Numerators are constant (1/p) or strictly increasing.
        for (std::size_t i = 1;; ++i) {
          const Rational n(family.numerator_for(family.prime(i)));
          if (n > x || (!gens.empty() && gens.back() == n)) break;
          gens.push_back(n);
        }
        const auto a = member(spec, x);
        CHECK_FALSE(a.unknown());
        CHECK(a.yes() == sieve_member(gens, x));
        if (a.yes()) {
          CHECK(a.witness.evaluate() == x);
          for (const auto& [atom, count] : a.witness.counts()) {
            CHECK(family.admissible(atom.den()));
          }
        }
      }
    }
  }
}

TEST_CASE("property: truncation monotonicity") {
  auto r = oracle::rng(34);
  const std::vector<PuiseuxSpec> specs{
      PuiseuxSpec::geometric(q("2/3")), PuiseuxSpec::geometric(q("3/2")),
      PuiseuxSpec::biinfinite_geometric(q("3/2")),
      PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::Odd),
      PuiseuxSpec::prime_reciprocal(PrimeForm::PredecessorOverPrime, PrimeFilter::All)};
  for (const auto& spec : specs) {
    for (int k = 0; k < 40; ++k) {
      const Rational x = Rational::normalize(oracle::uniform(r, 1, 60), oracle::uniform(r, 1, 36));
      const std::size_t depth = oracle::uniform(r, 1, 4);
      const auto small = member(truncate(spec, depth), x);
      if (small.yes()) {
        CHECK(member(truncate(spec, depth + 1), x).yes());
        CHECK(member(spec, x, depth).yes());
      }
    }
  }
}

TEST_CASE("atoms") {
  CHECK(atoms_up_to(PuiseuxSpec::geometric(q("3/2")), 4) == qs({"3/2", "9/4", "27/8", "81/16"}));
  CHECK(atoms_up_to(PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::Odd), 3) ==
        qs({"1/7", "1/5", "1/3"}));
  CHECK(atoms_up_to(PuiseuxSpec::finite(qs({"4", "6", "8", "9"})), 1) == qs({"4", "6", "9"}));
  CHECK(atoms_up_to(PuiseuxSpec::geometric(Rational(2)), 3) == qs({"2"}));
  CHECK_THROWS_AS(atoms_up_to(PuiseuxSpec::geometric(q("1/2")), 3), AtomicityUnknown);
  CHECK_THROWS_AS(atoms_up_to(PuiseuxSpec::biinfinite_geometric(Rational(2)), 3), AtomicityUnknown);
  CHECK(atoms_up_to(PuiseuxSpec::biinfinite_geometric(q("3/2")), 1) == qs({"2/3", "1", "3/2"}));
}

TEST_CASE("property: minimal generators of finite specs") {
  auto r = oracle::rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const auto gens = random_gens(r, 6, 20, 4);
    const auto atoms = atoms_up_to(PuiseuxSpec::finite(gens), 1);
    for (const auto& a : atoms) {
      CHECK(std::find(gens.begin(), gens.end(), a) != gens.end());
      std::vector<Rational> others;
      for (const auto& b : atoms) {
        if (b != a) others.push_back(b);
      }
      if (!others.empty()) CHECK_FALSE(sieve_member(others, a));
    }
    for (const auto& g : gens) CHECK(sieve_member(atoms, g));
    const auto c = classify(PuiseuxSpec::finite(gens));
    CHECK(c.transfer_krull == (atoms.size() == 1));
  }
}

TEST_CASE("property: family atoms persist in deeper truncations") {
  const std::vector<PuiseuxSpec> specs{
      PuiseuxSpec::geometric(q("3/2")), PuiseuxSpec::geometric(q("2/5")),
      PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::All),
      PuiseuxSpec::prime_reciprocal(PrimeForm::PredecessorOverPrime, PrimeFilter::All),
      PuiseuxSpec::prime_reciprocal(PrimeForm::SquarePlusOneOverPrime, PrimeFilter::Odd),
      PuiseuxSpec::primary_construction(2, 3, Polynomial::parse("n^2"), {NumericalMonoid{3, 5}})};
  for (const auto& spec : specs) {
    const auto atoms = atoms_up_to(spec, 3);
    for (std::size_t deeper = 3; deeper <= 5; ++deeper) {
      const auto gens = truncation_generators(spec, deeper);
      for (const auto& a : atoms) {
        std::vector<Rational> others;
        for (const auto& g : gens) {
          if (g != a) others.push_back(g);
        }
        CHECK_FALSE(FiniteMonoid(others).contains(a));
      }
    }
  }
}

TEST_CASE("integer part of a finitely generated monoid") {
  const auto ints = integer_part_atoms(qs({"9/2", "15/2"}));
  CHECK(ints == std::vector<Integer>{9, 12, 15});
  CHECK(integer_part_atoms(qs({"3", "5"})) == std::vector<Integer>{3, 5});
  CHECK(integer_part_atoms(qs({"1/2"})) == std::vector<Integer>{1});
  CHECK(integer_part_atoms(qs({"4", "6"})) == std::vector<Integer>{4, 6});

  auto r = oracle::rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    const auto gens = random_gens(r, 3, 15, 4);
    const auto atoms = integer_part_atoms(gens);
    const std::uint64_t bound = 600;
    // Integers of the monoid up to the bound, then their minimal elements.
    std::vector<std::uint64_t> members;
    for (std::uint64_t k = 1; k <= bound; ++k) {
      if (sieve_member(gens, Rational(k))) members.push_back(k);
    }
    std::vector<std::uint64_t> expected;
    std::vector<bool> is_member(bound + 1, false);
    for (auto k : members) is_member[k] = true;
    for (auto k : members) {
      bool decomposable = false;
      for (auto a : members) {
        if (a >= k) break;
        if (is_member[k - a]) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) expected.push_back(k);
    }
    REQUIRE(!atoms.empty());
    CHECK(atoms.back() <= Integer(static_cast<unsigned long>(bound / 2)));
    std::vector<std::uint64_t> got;
    for (const auto& a : atoms) got.push_back(a.get_ui());
    CHECK(got == expected);
  }
}

TEST_CASE("limit points and the BF criterion") {
  CHECK(zero_is_limit_point(PuiseuxSpec::finite(qs({"2/3"}))) == Tristate::False);
  CHECK(zero_is_limit_point(PuiseuxSpec::geometric(q("1/2"))) == Tristate::True);
  CHECK(zero_is_limit_point(PuiseuxSpec::geometric(q("5/2"))) == Tristate::False);
  CHECK(zero_is_limit_point(PuiseuxSpec::biinfinite_geometric(q("3/2"))) == Tristate::True);
  CHECK(zero_is_limit_point(PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::All)) ==
        Tristate::True);
  CHECK(zero_is_limit_point(PuiseuxSpec::prime_reciprocal(PrimeForm::PredecessorOverPrime, PrimeFilter::All)) ==
        Tristate::False);
  CHECK(zero_is_limit_point(PuiseuxSpec::prime_reciprocal(PrimeForm::SquarePlusOneOverPrime, PrimeFilter::All)) ==
        Tristate::False);
  CHECK(zero_is_limit_point(
            PuiseuxSpec::primary_construction(2, 3, Polynomial::parse("n^2"), {NumericalMonoid{3, 5}})) ==
        Tristate::False);

  CHECK(is_bf_witnessed(PuiseuxSpec::finite(qs({"3/2", "5/2"}))) == Tristate::True);
  CHECK(is_bf_witnessed(PuiseuxSpec::geometric(q("5/2"))) == Tristate::True);
  CHECK(is_bf_witnessed(PuiseuxSpec::geometric(q("1/2"))) == Tristate::Unknown);
}

TEST_CASE("classification") {
  const auto one = classify(PuiseuxSpec::finite(qs({"2/3"})));
  CHECK(one.transfer_finite);
  CHECK(one.transfer_krull);
  CHECK(one.krull);
  CHECK(one.c_monoid);

  const auto two = classify(PuiseuxSpec::finite(qs({"3", "5"})));
  CHECK(two.transfer_finite);
  CHECK(two.c_monoid);
  CHECK_FALSE(two.transfer_krull);
  CHECK_FALSE(two.krull);

  // Redundant generators do not matter: <2, 4> is generated by 2.
  CHECK(classify(PuiseuxSpec::finite(qs({"2", "4"}))).krull);

  for (const auto& spec : {PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::Odd),
                           PuiseuxSpec::geometric(q("3/2")), PuiseuxSpec::biinfinite_geometric(q("5/3"))}) {
    const auto c = classify(spec);
    CHECK_FALSE(c.transfer_finite);
    CHECK_FALSE(c.transfer_krull);
    CHECK_FALSE(c.krull);
    CHECK_FALSE(c.c_monoid);
    CHECK(c.evidence.find("infinitely many atoms") != std::string::npos);
  }

  // Degenerate geometric families.
  CHECK(classify(PuiseuxSpec::geometric(Rational(3))).krull);
  CHECK_FALSE(classify(PuiseuxSpec::geometric(q("1/2"))).transfer_finite);
  CHECK(classify(PuiseuxSpec::geometric(Rational(1))).krull);

  // With p = 1 the construction collapses to q * S_1.
  const auto collapsed =
      classify(PuiseuxSpec::primary_construction(1, 3, Polynomial::parse("n^2"), {NumericalMonoid{3, 5}}));
  CHECK(collapsed.transfer_finite);
  CHECK_FALSE(collapsed.transfer_krull);
}
