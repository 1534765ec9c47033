#pragma once

// Exact nonnegative rationals with arbitrary-precision numerator and
// denominator, plus the p-adic valuation used throughout the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace puiseux {

using Integer = mpz_class;

/// A nonnegative rational kept in lowest terms; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value);

  /// Reduced form of num/den. Throws DomainError when den is zero or
  /// either argument is negative.
  static Rational normalize(const Integer& num, const Integer& den);

  /// Parses "a" or "a/b" (unreduced input allowed). Floats, signs and
  /// exponents are rejected.
  static Rational parse(std::string_view text);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return den() == 1; }

  /// "a/b", or "a" when the denominator is one.
  std::string to_string() const;

  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(const Rational& lhs, const Rational& rhs);
  /// Throws DomainError when the result would be negative.
  friend Rational operator-(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
  }

 private:
  mpq_class value_{0};
};

/// lhs - rhs, or nullopt when rhs > lhs.
std::optional<Rational> difference(const Rational& lhs, const Rational& rhs);

/// r^e for any integer exponent; zero may not be raised to a negative power.
Rational pow(const Rational& r, std::int64_t exponent);

inline const Integer& numerator(const Rational& q) { return q.num(); }
inline const Integer& denominator(const Rational& q) { return q.den(); }

/// v_p(q), with the distinguished value infinity exactly at q = 0.
struct Valuation {
  bool infinite = false;
  std::int64_t value = 0;

  static Valuation infinity() { return {true, 0}; }
  static Valuation finite(std::int64_t v) { return {false, v}; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  /// Infinity absorbs; otherwise ordinary addition.
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return infinity();
    return finite(a.value + b.value);
  }
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

bool is_prime(const Integer& n);

/// Exponent of p in a positive integer n.
std::int64_t padic_valuation(const Integer& p, const Integer& n);

/// v_p(n(q)) - v_p(d(q)); infinity for q = 0. Throws DomainError if p is
/// not prime.
Valuation padic_valuation(const Integer& p, const Rational& q);

/// Distinct prime divisors of n > 0, ascending (trial division).
std::vector<Integer> prime_divisors(Integer n);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::string to_string(const Integer& n);

}  // namespace puiseux

template <>
struct std::hash<puiseux::Rational> {
  std::size_t operator()(const puiseux::Rational& q) const noexcept;
};
