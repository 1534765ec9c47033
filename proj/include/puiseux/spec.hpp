#pragma once

// Descriptions of Puiseux monoids: explicit finite generator lists and the
// parametric infinite families, which are never materialized.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "puiseux/numerical.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

struct FiniteGen {
  std::vector<Rational> generators;
  friend bool operator==(const FiniteGen&, const FiniteGen&) = default;
};

/// <r^n : n >= from>, or <r^n : n in Z> when biinfinite.
struct Geometric {
  Rational ratio;
  std::int64_t from = 1;
  bool biinfinite = false;
  friend bool operator==(const Geometric&, const Geometric&) = default;
};

enum class PrimeForm { Reciprocal, PredecessorOverPrime, SquarePlusOneOverPrime };
enum class PrimeFilter { All, Odd };

/// <g(p) : p admissible prime> with g one of 1/p, (p-1)/p, (p^2+1)/p.
struct PrimeReciprocal {
  PrimeForm form = PrimeForm::Reciprocal;
  PrimeFilter primes = PrimeFilter::All;
  friend bool operator==(const PrimeReciprocal&, const PrimeReciprocal&) = default;

  /// The k-th admissible prime, k >= 1.
  Integer prime(std::size_t k) const;
  /// g(p) for an admissible prime p.
  Rational generator_for(const Integer& p) const;
  /// n(g(p)) = p * g(p).
  Integer numerator_for(const Integer& p) const;
  bool admissible(const Integer& p) const;
};

/// Polynomial in n with nonnegative integer coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);

  /// Accepts sums of terms like "3", "n", "2n", "2*n^3", "n^2".
  static Polynomial parse(std::string_view text);

  Integer operator()(const Integer& n) const;
  std::string to_string() const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Integer> coefficients_;  // index = degree
};

/// <q^f(n) s / p^n : n >= 1, s in S_n>, S_n repeating its last entry.
struct PrimaryConstruction {
  Integer p;
  Integer q;
  Polynomial f;
  std::vector<NumericalMonoid> sn;

  const NumericalMonoid& level(std::size_t n) const {
    return sn[std::min(n, sn.size()) - 1];
  }
  /// Generators contributed by level n: q^f(n) a / p^n for a in A(S_n).
  std::vector<Rational> level_generators(std::size_t n) const;

  friend bool operator==(const PrimaryConstruction&, const PrimaryConstruction&) = default;
};

class PuiseuxSpec {
 public:
  using Variant = std::variant<FiniteGen, Geometric, PrimeReciprocal, PrimaryConstruction>;

  static PuiseuxSpec finite(std::vector<Rational> generators);
  static PuiseuxSpec geometric(const Rational& ratio, std::int64_t from = 1);
  static PuiseuxSpec biinfinite_geometric(const Rational& ratio);
  static PuiseuxSpec prime_reciprocal(PrimeForm form, PrimeFilter primes);
  /// Checks gcd(p,q) = 1, f(1) = 1 and that {S_n} is inclusion-decreasing.
  /// The growth inequality is checked by build_primary_construction.
  static PuiseuxSpec primary_construction(Integer p, Integer q, Polynomial f,
                                          std::vector<NumericalMonoid> sn);

  const Variant& variant() const { return variant_; }
  bool is_finite() const { return std::holds_alternative<FiniteGen>(variant_); }
  const FiniteGen& as_finite() const;

  friend bool operator==(const PuiseuxSpec&, const PuiseuxSpec&) = default;

 private:
  explicit PuiseuxSpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

std::string_view to_string(PrimeForm form);
std::string_view to_string(PrimeFilter filter);

}  // namespace puiseux
