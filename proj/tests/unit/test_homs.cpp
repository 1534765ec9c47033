#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/homs.hpp"

using namespace puiseux;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

PuiseuxSpec fin(std::initializer_list<const char*> gens) {
  std::vector<Rational> g;
  for (const auto* s : gens) g.push_back(R(s));
  return PuiseuxSpec::finite(g);
}

}  // namespace

TEST_CASE("homomorphism checks") {
  const auto m = fin({"1/2", "1/3"});
  const auto n = fin({"1", "2/3"});
  CHECK(check_hom(R("2"), m, n).verdict == HomVerdict::Valid);
  const auto bad = check_hom(R("1"), m, n);
  CHECK(bad.verdict == HomVerdict::Invalid);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == R("1/2"));
  CHECK(check_hom(R("0"), m, n).verdict == HomVerdict::Valid);

  const auto g = PuiseuxSpec::geometric(R("5/2"), 0);
  CHECK(check_hom(R("5/2"), g, g).verdict == HomVerdict::Valid);
  CHECK(check_hom(R("2/5"), g, g).verdict == HomVerdict::Invalid);
  const auto bi = PuiseuxSpec::biinfinite_geometric(R("3/2"));
  CHECK(check_hom(R("4/9"), bi, bi).verdict == HomVerdict::Valid);
  CHECK(check_hom(R("1/2"), g, g).verdict == HomVerdict::Invalid);
  CHECK(check_hom(R("2"), g, g).verdict == HomVerdict::ValidAtDepth);

  const auto odd = PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::Odd);
  const auto all = PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::All);
  CHECK(check_hom(R("1"), odd, all).verdict == HomVerdict::ValidAtDepth);
  CHECK(check_hom(R("1"), all, odd).verdict == HomVerdict::Invalid);

  CHECK(to_string(HomVerdict::ValidAtDepth) == "validAtDepth");
}

TEST_CASE("transfer homomorphisms") {
  const auto m = fin({"3", "5"});
  const auto n = fin({"3/2", "5/2"});
  const auto t = is_transfer(R("1/2"), m, n);
  CHECK(t.transfer);
  const auto inc = is_transfer(R("1"), fin({"2", "3"}), fin({"1"}));
  CHECK_FALSE(inc.transfer);
  REQUIRE(inc.witness);
  CHECK(*inc.witness == R("1"));
  CHECK_FALSE(is_transfer(R("0"), m, n).transfer);
  CHECK_THROWS_AS(is_transfer(R("1/3"), m, n), DomainError);
  CHECK_THROWS_AS(is_transfer(R("1"), PuiseuxSpec::geometric(R("3/2")), m), DomainError);

  const auto rep = verify_transfer_properties(R("1/2"), m, n, {R("3"), R("8"), R("15"), R("7")});
  CHECK(rep.all_ok);
  REQUIRE(rep.samples.size() == 4);
  CHECK(rep.samples[0].atom_in_domain);
  CHECK(rep.samples[0].atom_in_codomain);
  CHECK(rep.samples[3].skipped);
  CHECK(rep.samples[2].lengths_domain.values() == std::set<Integer>{3, 5});
}

TEST_CASE("property: scaling is a transfer and preserves factorization data") {
  auto rng = oracle::rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> gens;
    const std::size_t k = oracle::uniform(rng, 1, 4);
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(Rational::normalize(Integer(oracle::uniform(rng, 1, 20)),
                                         Integer(oracle::uniform(rng, 1, 4))));
    }
    const Rational q = Rational::normalize(Integer(oracle::uniform(rng, 1, 9)),
                                           Integer(oracle::uniform(rng, 1, 9)));
    std::vector<Rational> scaled;
    for (const auto& g : gens) scaled.push_back(q * g);
    const auto m = PuiseuxSpec::finite(gens);
    const auto n = PuiseuxSpec::finite(scaled);
    CHECK(is_transfer(q, m, n).transfer);
    std::vector<Rational> samples;
    for (int s = 0; s < 10; ++s) {
      samples.push_back(Rational::normalize(Integer(oracle::uniform(rng, 0, 40)), Integer(oracle::uniform(rng, 1, 4))));
    }
    CHECK(verify_transfer_properties(q, m, n, samples).all_ok);
  }
}

TEST_CASE("inferring the multiplier") {
  CHECK(infer_multiplier({R("2"), R("3")}, {R("1"), R("3/2")}) == std::optional<Rational>(R("1/2")));
  CHECK_FALSE(infer_multiplier({R("2"), R("3")}, {R("1"), R("1")}));
  CHECK_FALSE(infer_multiplier({}, {}));
  CHECK_THROWS_AS(infer_multiplier({R("1")}, {}), DomainError);
}

TEST_CASE("index shifts from valuations") {
  CHECK(index_shift(R("3/2"), R("9/4")).shift == std::optional<std::int64_t>(2));
  CHECK(index_shift(R("3/2"), R("8/27")).shift == std::optional<std::int64_t>(-3));
  CHECK(index_shift(R("3/2"), R("1")).shift == std::optional<std::int64_t>(0));
  CHECK_FALSE(index_shift(R("3/2"), R("3")).shift);
  CHECK_FALSE(index_shift(R("3/2"), R("5/2")).shift);
  CHECK_FALSE(index_shift(R("4/9"), R("2/3")).shift);
  CHECK_THROWS_AS(index_shift(R("1"), R("2")), DomainError);
}

TEST_CASE("property: fingerprints recover exponents") {
  const std::vector<const char*> ratios{"3/2", "5/3", "7/4", "4/9", "10/21"};
  for (const auto* rs : ratios) {
    const Rational r = R(rs);
    for (std::int64_t k = -5; k <= 5; ++k) {
      CHECK(index_shift(r, pow(r, k)).shift == std::optional<std::int64_t>(k));
      CHECK_FALSE(index_shift(r, pow(r, k) * R("11")).shift);
    }
  }
}

TEST_CASE("automorphisms of a bi-infinite geometric monoid") {
  const auto a = automorphism_search(PuiseuxSpec::biinfinite_geometric(R("5/3")), 1);
  CHECK(a.multipliers == std::vector<Rational>{R("3/5"), R("1"), R("5/3")});
  CHECK(a.shifts == std::vector<std::int64_t>{-1, 0, 1});
  CHECK(a.candidates_tested == a.multipliers.size() + a.rejected.size());

  const auto b = automorphism_search(PuiseuxSpec::biinfinite_geometric(R("3/2")), 3);
  std::vector<Rational> expected;
  for (std::int64_t k = -3; k <= 3; ++k) expected.push_back(pow(R("3/2"), k));
  std::sort(expected.begin(), expected.end());
  CHECK(b.multipliers == expected);

  CHECK_THROWS_AS(automorphism_search(PuiseuxSpec::geometric(R("3/2")), 2), DomainError);
  CHECK_THROWS_AS(automorphism_search(PuiseuxSpec::biinfinite_geometric(R("3")), 2), DomainError);
  CHECK_THROWS_AS(automorphism_search(PuiseuxSpec::biinfinite_geometric(R("3/2")), 0), DomainError);
}

TEST_CASE("parity map on odd prime reciprocals") {
  CHECK(parity(R("1/3")) == 1);
  CHECK(parity(R("2/3")) == 0);
  const auto f = parity_hom_fixture();
  CHECK(f.additive);
  CHECK(f.surjective);
  CHECK(f.kernel_witness == R("2/3"));
  CHECK_FALSE(f.checks.empty());
  for (const auto& c : f.checks) CHECK(c.theta_sum == (c.theta_x + c.theta_y) % 2);
}
