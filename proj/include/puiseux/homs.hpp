#pragma once

// Homomorphisms between Puiseux monoids. Every homomorphism is
// multiplication by a nonnegative rational q, so checks reduce to
// membership of the images of generators.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

struct HomSpec {
  Rational q;
  PuiseuxSpec domain;
  PuiseuxSpec codomain;
};

enum class HomVerdict { Valid, Invalid, ValidAtDepth, Unknown };
std::string_view to_string(HomVerdict v);

struct HomCheck {
  HomVerdict verdict = HomVerdict::Unknown;
  std::optional<Rational> witness;  // generator whose image is not (known to be) in N
  std::size_t depth = 0;            // generators checked for families
  std::string reason;
};

HomCheck check_hom(const Rational& q, const PuiseuxSpec& domain, const PuiseuxSpec& codomain,
                   std::size_t depth = 8);

struct TransferCheck {
  bool transfer = false;
  std::optional<Rational> witness;  // atom of N outside q*M
  std::string reason;
};

/// q*M = N for finite specs. Throws DomainError when q is not a
/// homomorphism M -> N or a spec is not finite.
TransferCheck is_transfer(const Rational& q, const PuiseuxSpec& domain, const PuiseuxSpec& codomain);

struct TransferSample {
  Rational x;
  bool skipped = false;
  bool atom_in_domain = false;
  bool atom_in_codomain = false;
  LengthSet lengths_domain;
  LengthSet lengths_codomain;
  bool ok = false;
  std::string note;
};

struct TransferReport {
  std::vector<TransferSample> samples;
  bool all_ok = true;
};

TransferReport verify_transfer_properties(const Rational& q, const PuiseuxSpec& domain,
                                          const PuiseuxSpec& codomain,
                                          const std::vector<Rational>& samples);

/// The common ratio images[i]/gens[i], if the assignment gens[i] -> images[i]
/// is consistent with a single multiplier (n_i * φ(n_j) = n_j * φ(n_i)).
std::optional<Rational> infer_multiplier(const std::vector<Rational>& gens,
                                         const std::vector<Rational>& images);

/// k with s = r^k, decided by p-adic valuations over the primes of n(r) d(r).
struct ShiftTest {
  std::optional<std::int64_t> shift;
  std::string reason;
};
ShiftTest index_shift(const Rational& r, const Rational& s);

struct AutomorphismSearch {
  std::vector<Rational> multipliers;  // ascending
  std::vector<std::int64_t> shifts;   // r^shift = multiplier
  std::size_t candidates_tested = 0;
  std::vector<std::pair<Rational, std::string>> rejected;
};

/// Multipliers q with q*{r^n} = {r^n} among r^k, |k| <= window, and all a/b
/// bounded by the window's largest numerator and denominator.
AutomorphismSearch automorphism_search(const PuiseuxSpec& spec, std::size_t window);

/// The parity map on <1/p : p odd prime>: x -> n(x) mod 2.
int parity(const Rational& x);

struct ParityFixture {
  struct Check {
    Rational x;
    Rational y;
    int theta_x;
    int theta_y;
    int theta_sum;
  };
  std::vector<Check> checks;
  bool additive = true;
  bool surjective = false;
  Rational kernel_witness;  // nonzero element with parity 0
};

ParityFixture parity_hom_fixture();

}  // namespace puiseux
