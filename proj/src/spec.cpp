#include "puiseux/spec.hpp"

#include <cctype>
#include <mutex>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

/// Primes in ascending order, grown on demand and shared process-wide.
Integer nth_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<Integer> primes{Integer(2)};
  std::lock_guard lock(mutex);
  while (primes.size() < k) {
    Integer next;
    mpz_nextprime(next.get_mpz_t(), primes.back().get_mpz_t());
    primes.push_back(next);
  }
  return primes[k - 1];
}

}  // namespace

Integer PrimeReciprocal::prime(std::size_t k) const {
  if (k == 0) throw DomainError("prime enumeration starts at 1");
  return nth_prime(primes == PrimeFilter::Odd ? k + 1 : k);
}

bool PrimeReciprocal::admissible(const Integer& p) const {
  return is_prime(p) && !(primes == PrimeFilter::Odd && p == 2);
}

Integer PrimeReciprocal::numerator_for(const Integer& p) const {
  switch (form) {
    case PrimeForm::Reciprocal:
      return 1;
    case PrimeForm::PredecessorOverPrime:
      return p - 1;
    case PrimeForm::SquarePlusOneOverPrime:
      return p * p + 1;
  }
  return 1;
}

Rational PrimeReciprocal::generator_for(const Integer& p) const {
  return Rational::normalize(numerator_for(p), p);
}

Polynomial::Polynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (sgn(c) < 0) throw DomainError("polynomial coefficients must be nonnegative");
  }
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw DomainError("empty polynomial");
  std::vector<Integer> coeffs;
  auto fail = [&](const std::string& why) {
    return DomainError("malformed polynomial '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw fail("empty term");
    std::size_t i = 0;
    Integer coef = 1;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
      coef = Integer(term.substr(0, i), 10);
      if (i < term.size() && term[i] == '*') ++i;
    }
    std::size_t degree = 0;
    if (i < term.size()) {
      if (term[i] != 'n') throw fail("unexpected '" + term.substr(i) + "'");
      ++i;
      degree = 1;
      if (i < term.size()) {
        if (term[i] != '^' || i + 1 == term.size()) throw fail("expected '^k' after n");
        const std::string exp = term.substr(i + 1);
        for (char c : exp) {
          if (!std::isdigit(static_cast<unsigned char>(c))) throw fail("bad exponent '" + exp + "'");
        }
        if (exp.size() > 3) throw fail("exponent too large");
        degree = std::stoul(exp);
      }
    } else if (i == 0) {
      throw fail("empty term");
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, Integer(0));
    coeffs[degree] += coef;
    if (end == s.size()) break;
    pos = end + 1;
  }
  return Polynomial(std::move(coeffs));
}

Integer Polynomial::operator()(const Integer& n) const {
  Integer acc = 0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * n + coefficients_[i];
  return acc;
}

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const Integer& c = coefficients_[i];
    if (sgn(c) == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += "n";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<Rational> PrimaryConstruction::level_generators(std::size_t n) const {
  const Integer exponent = f(Integer(static_cast<unsigned long>(n)));
  if (!exponent.fits_ulong_p()) throw DomainError("exponent f(n) too large");
  Integer qf;
  Integer pn;
  mpz_pow_ui(qf.get_mpz_t(), q.get_mpz_t(), exponent.get_ui());
  mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
  std::vector<Rational> out;
  for (auto a : level(n).generators()) {
    out.push_back(Rational::normalize(qf * Integer(static_cast<unsigned long>(a)), pn));
  }
  return out;
}

PuiseuxSpec PuiseuxSpec::finite(std::vector<Rational> generators) {
  if (generators.empty()) throw DomainError("finite spec needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_zero()) throw DomainError("generators must be strictly positive");
  }
  return PuiseuxSpec(FiniteGen{std::move(generators)});
}

PuiseuxSpec PuiseuxSpec::geometric(const Rational& ratio, std::int64_t from) {
  if (ratio.is_zero()) throw DomainError("geometric ratio must be positive");
  return PuiseuxSpec(Geometric{ratio, from, false});
}

PuiseuxSpec PuiseuxSpec::biinfinite_geometric(const Rational& ratio) {
  if (ratio.is_zero()) throw DomainError("geometric ratio must be positive");
  return PuiseuxSpec(Geometric{ratio, 0, true});
}

PuiseuxSpec PuiseuxSpec::prime_reciprocal(PrimeForm form, PrimeFilter primes) {
  return PuiseuxSpec(PrimeReciprocal{form, primes});
}

PuiseuxSpec PuiseuxSpec::primary_construction(Integer p, Integer q, Polynomial f,
                                              std::vector<NumericalMonoid> sn) {
  if (sgn(p) <= 0 || sgn(q) <= 0) throw DomainError("p and q must be positive integers");
  if (gcd(p, q) != 1) {
    throw DomainError("gcd(p, q) = " + gcd(p, q).get_str() + ", construction needs coprime p and q");
  }
  if (f(1) != 1) throw DomainError("construction needs f(1) = 1, got " + f(1).get_str());
  if (sn.empty()) throw DomainError("construction needs at least one numerical monoid S_1");
  for (std::size_t i = 1; i < sn.size(); ++i) {
    for (auto g : sn[i].generators()) {
      if (!sn[i - 1].contains(g)) {
        throw DomainError("S_" + std::to_string(i + 1) + " is not contained in S_" +
                          std::to_string(i) + ": generator " + std::to_string(g));
      }
    }
  }
  return PuiseuxSpec(PrimaryConstruction{std::move(p), std::move(q), std::move(f), std::move(sn)});
}

const FiniteGen& PuiseuxSpec::as_finite() const {
  if (const auto* f = std::get_if<FiniteGen>(&variant_)) return *f;
  throw DomainError("operation requires a finitely generated spec; truncate the family first");
}

std::string_view to_string(PrimeForm form) {
  switch (form) {
    case PrimeForm::Reciprocal:
      return "1/p";
    case PrimeForm::PredecessorOverPrime:
      return "(p-1)/p";
    case PrimeForm::SquarePlusOneOverPrime:
      return "(p^2+1)/p";
  }
  return "?";
}

std::string_view to_string(PrimeFilter filter) {
  return filter == PrimeFilter::Odd ? "odd" : "all";
}

}  // namespace puiseux
