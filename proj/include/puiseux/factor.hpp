#pragma once

// Factorizations, length sets, elasticity and half-factoriality for finitely
// generated Puiseux monoids. Infinite families must be truncated first.

#include <optional>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

/// Z(x) over the atoms of <gens>, sorted. Empty when x is not in the monoid;
/// Z(0) holds the empty factorization.
std::vector<Factorization> factorizations(const std::vector<Rational>& gens, const Rational& x);
/// Throws DomainError for infinite families.
std::vector<Factorization> factorizations(const PuiseuxSpec& spec, const Rational& x);

LengthSet length_set(const std::vector<Rational>& gens, const Rational& x);
LengthSet length_set(const PuiseuxSpec& spec, const Rational& x);

/// max L(x) / min L(x); x must be a nonzero element.
Rational elasticity(const PuiseuxSpec& spec, const Rational& x);

struct HalfFactorialReport {
  bool half_factorial = true;
  std::optional<Rational> counterexample;  // least x <= bound with |L(x)| > 1
  LengthSet counterexample_lengths;        // its min and max length
};

HalfFactorialReport half_factorial_up_to(const PuiseuxSpec& spec, const Rational& bound);

}  // namespace puiseux
