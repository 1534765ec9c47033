#include "puiseux/factor.hpp"

#include <algorithm>
#include <limits>

#include "puiseux/errors.hpp"
#include "puiseux/monoid.hpp"

namespace puiseux {

namespace {

constexpr std::uint64_t kLengthTableLimit = std::uint64_t{1} << 24;

}  // namespace

std::vector<Factorization> factorizations(const std::vector<Rational>& gens, const Rational& x) {
  if (x.is_zero()) return {Factorization{}};
  const FiniteMonoid m(minimal_generators(gens));
  std::vector<Factorization> out;
  m.for_each_factorization(x, [&](const Factorization& f) {
    out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Factorization> factorizations(const PuiseuxSpec& spec, const Rational& x) {
  return factorizations(spec.as_finite().generators, x);
}

LengthSet length_set(const std::vector<Rational>& gens, const Rational& x) {
  LengthSet out;
  if (x.is_zero()) {
    out.insert(0);
    return out;
  }
  const FiniteMonoid m(minimal_generators(gens));
  m.for_each_factorization(x, [&](const Factorization& f) {
    out.insert(f.length());
    return true;
  });
  return out;
}

LengthSet length_set(const PuiseuxSpec& spec, const Rational& x) {
  return length_set(spec.as_finite().generators, x);
}

Rational elasticity(const PuiseuxSpec& spec, const Rational& x) {
  if (x.is_zero()) throw DomainError("elasticity is defined on nonzero elements only");
  const LengthSet l = length_set(spec, x);
  if (l.empty()) throw DomainError(x.to_string() + " is not an element of the monoid");
  return Rational::normalize(l.max(), l.min());
}

HalfFactorialReport half_factorial_up_to(const PuiseuxSpec& spec, const Rational& bound) {
  if (bound.is_zero()) throw DomainError("bound must be positive");
  const FiniteMonoid m(minimal_generators(spec.as_finite().generators));
  const Integer& scale = m.scale();
  const Integer top = bound.num() * scale / bound.den();
  if (top > kLengthTableLimit) {
    throw DomainError("bound " + bound.to_string() + " needs " + top.get_str() +
                      " lattice points; lower the bound");
  }
  const std::size_t size = top.get_ui() + 1;
  std::vector<std::uint64_t> weights;
  for (const auto& a : m.generators()) {
    const Integer w = a.num() * (scale / a.den());
    if (w <= top) weights.push_back(w.get_ui());
  }
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> shortest(size, kNone);
  std::vector<std::uint64_t> longest(size, 0);
  shortest[0] = 0;
  HalfFactorialReport report;
  for (std::size_t v = 1; v < size; ++v) {
    for (auto w : weights) {
      if (w > v || shortest[v - w] == kNone) continue;
      shortest[v] = std::min(shortest[v], shortest[v - w] + 1);
      longest[v] = std::max(longest[v], longest[v - w] + 1);
    }
    if (shortest[v] != kNone && shortest[v] != longest[v]) {
      report.half_factorial = false;
      report.counterexample = Rational::normalize(Integer(static_cast<unsigned long>(v)), scale);
      report.counterexample_lengths.insert(Integer(static_cast<unsigned long>(shortest[v])));
      report.counterexample_lengths.insert(Integer(static_cast<unsigned long>(longest[v])));
      return report;
    }
  }
  return report;
}

}  // namespace puiseux
