#include "puiseux/factorization.hpp"

namespace puiseux {

void Factorization::add(const Rational& atom, const Integer& count) {
  if (sgn(count) == 0) return;
  counts_[atom] += count;
}

Integer Factorization::length() const {
  Integer n = 0;
  for (const auto& [atom, c] : counts_) n += c;
  return n;
}

Rational Factorization::evaluate() const {
  Rational sum;
  for (const auto& [atom, c] : counts_) sum += Rational(c) * atom;
  return sum;
}

}  // namespace puiseux
