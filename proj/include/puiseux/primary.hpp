#pragma once

// Strongly primary machinery: scoped finitary certificates (n, S), the
// certificate for monoids generated by the positive powers of r > 1, the
// growth construction with its inequality report, and the valuation
// refutation for atoms with pairwise coprime denominators.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

struct CertificateScope {
  Rational x_bound;
  std::size_t depth = 0;
  std::size_t elements_checked = 0;
};

/// n*M• ⊆ S + M checked for every x of the depth truncation with x <= x_bound.
struct FinitaryCertificate {
  struct Check {
    Rational x;
    Rational s;               // chosen element of S
    Factorization remainder;  // n*x - s as an element of M
  };
  Integer n;
  std::vector<Rational> s;
  CertificateScope scope;
  std::vector<Check> checks;
};

/// The least x (truncation depth first, then value) with n*x - s not shown
/// to lie in M for any s. `undecided` marks failures where some membership
/// query returned Unknown rather than No.
struct FailureWitness {
  Integer n;
  std::vector<Rational> s;
  CertificateScope scope;
  Rational x;
  std::size_t first_depth = 0;
  bool undecided = false;
  std::string reason;
};

using CertificateResult = std::variant<FinitaryCertificate, FailureWitness>;

CertificateResult verify_finitary_certificate(const PuiseuxSpec& spec, const Integer& n,
                                              std::vector<Rational> s, const Rational& x_bound,
                                              std::size_t depth);

/// Certificate (d(r), {n(r)}) for <r^k : k >= 1>, r > 1, together with the
/// identity n(r) r^j - n(r) = (n(r) - d(r)) (r + ... + r^j) for j <= J as
/// explicit factorizations.
struct PowerCertificate {
  struct Identity {
    std::size_t j = 0;
    Rational lhs;
    Factorization rhs;
  };
  Integer n;
  std::vector<Rational> s;
  std::vector<Identity> identities;
};

PowerCertificate mcyclic_certificate(const Rational& r, std::size_t max_power);

struct InequalityRow {
  std::size_t level = 0;
  Integer lhs;  // q^(f(n+1)-f(n)) - p^n
  Integer rhs;  // p * max{F(S_n), max A(S_n)}
  bool holds = false;
};

struct ConstructionReport {
  PuiseuxSpec spec;
  std::vector<InequalityRow> rows;
  /// Candidate finitary pair: n = p, S = A(M ∩ N0) ∪ q*A(S_1), with the
  /// integer part taken at certificate_depth: the report depth, or the
  /// deepest truncation whose cleared generators fit in 64 bits.
  Integer certificate_n;
  std::vector<Rational> certificate_s;
  std::size_t certificate_depth = 0;
};

/// Throws ConstructionError naming the first level n <= depth where the
/// growth inequality fails.
ConstructionReport build_primary_construction(const Integer& p, const Integer& q, const Polynomial& f,
                                              std::vector<NumericalMonoid> sn, std::size_t depth);

struct ValuationRefutation {
  Integer n;
  std::vector<Rational> s;
  Rational witness_atom;
  Integer witness_denominator;
  std::size_t witness_index = 0;  // 1-based position among the atoms
  std::string argument;
};

struct NotRefuted {
  Integer n;
  std::vector<Rational> s;
  std::size_t atoms_scanned = 0;
  std::string reason;
};

using RefutationResult = std::variant<ValuationRefutation, NotRefuted>;

/// Accepts the prime families and finite specs whose atoms have pairwise
/// coprime denominators. The scan over an infinite family stops after
/// scan_cap atoms.
RefutationResult refute_strongly_primary(const PuiseuxSpec& spec, const Integer& n,
                                         std::vector<Rational> s, std::size_t scan_cap = 100000);

}  // namespace puiseux
