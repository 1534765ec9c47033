#include "puiseux/rational.hpp"

#include <cctype>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

Integer parse_digits(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw DomainError("malformed rational '" + std::string(whole) + "': empty component");
  }
  for (char c : text) {
    if (c == '.' || c == 'e' || c == 'E') {
      throw DomainError("malformed rational '" + std::string(whole) +
                        "': floats are not accepted, write an exact fraction such as \"3/2\"");
    }
    if (c == '-') {
      throw DomainError("malformed rational '" + std::string(whole) +
                        "': negative values are outside Q>=0");
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(text), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::uint64_t value) {
  mpz_class n;
  mpz_import(n.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  value_ = mpq_class(n);
}

Rational::Rational(const Integer& value) {
  if (sgn(value) < 0) throw DomainError("negative rational " + value.get_str());
  value_ = mpq_class(value);
}

Rational Rational::normalize(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  if (sgn(num) < 0 || sgn(den) < 0) throw DomainError("negative rational");
  Rational q;
  q.value_ = mpq_class(num, den);
  q.value_.canonicalize();
  return q;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_digits(t, text));
  return normalize(parse_digits(trim(t.substr(0, slash)), text),
                   parse_digits(trim(t.substr(slash + 1)), text));
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return normalize(den(), num());
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  Rational q;
  q.value_ = lhs.value_ / rhs.value_;
  return q;
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
  auto d = difference(lhs, rhs);
  if (!d) throw DomainError(lhs.to_string() + " - " + rhs.to_string() + " is negative");
  return *d;
}

std::optional<Rational> difference(const Rational& lhs, const Rational& rhs) {
  if (rhs > lhs) return std::nullopt;
  const Integer n = lhs.num() * rhs.den() - rhs.num() * lhs.den();
  return Rational::normalize(n, lhs.den() * rhs.den());
}

Rational pow(const Rational& r, std::int64_t exponent) {
  if (exponent < 0) return pow(r.reciprocal(), -exponent);
  Integer n;
  Integer d;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), e);
  return Rational::normalize(n, d);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::int64_t padic_valuation(const Integer& p, const Integer& n) {
  if (sgn(n) <= 0) throw DomainError("valuation of a non-positive integer");
  return static_cast<std::int64_t>(
      mpz_remove(Integer().get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation padic_valuation(const Integer& p, const Rational& q) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  if (q.is_zero()) return Valuation::infinity();
  return Valuation::finite(padic_valuation(p, q.num()) - padic_valuation(p, q.den()));
}

std::vector<Integer> prime_divisors(Integer n) {
  if (sgn(n) <= 0) throw DomainError("prime divisors of a non-positive integer");
  std::vector<Integer> primes;
  for (Integer d = 2; d * d <= n; ++d) {
    if (is_prime(n)) break;
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace puiseux

std::size_t std::hash<puiseux::Rational>::operator()(const puiseux::Rational& q) const noexcept {
  const std::size_t h1 = std::hash<std::string>{}(q.num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q.den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
