#include "puiseux/primary.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>
#include <unordered_set>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

struct SweepOutcome {
  bool ok = false;
  bool undecided = false;
  Rational s;
  Factorization remainder;
  std::string reason;
};

SweepOutcome check_element(const PuiseuxSpec& spec, const Integer& n,
                           const std::vector<Rational>& s_list, const Rational& x,
                           std::size_t depth) {
  SweepOutcome out;
  const Rational nx = Rational(n) * x;
  for (const auto& s : s_list) {
    const auto rest = difference(nx, s);
    if (!rest) continue;
    const MembershipAnswer a = member(spec, *rest, depth);
    if (a.yes()) {
      out.ok = true;
      out.s = s;
      out.remainder = a.witness;
      return out;
    }
    if (a.unknown()) out.undecided = true;
  }
  out.reason = out.undecided ? "no s in S gave a decided member n*x - s; some queries were unknown"
                             : "n*x - s is not in M for every s in S";
  return out;
}

/// Elements of the truncations grouped by the first depth at which they
/// appear, ascending within a depth.
std::vector<std::pair<Rational, std::size_t>> depth_major_elements(const PuiseuxSpec& spec,
                                                                   const Rational& bound,
                                                                   std::size_t depth) {
  std::vector<std::pair<Rational, std::size_t>> out;
  std::unordered_set<Rational> seen;
  for (std::size_t k = 1; k <= depth; ++k) {
    const FiniteMonoid m(truncation_generators(spec, k));
    for (auto& x : m.elements_up_to(bound)) {
      if (x.is_zero() || !seen.insert(x).second) continue;
      out.emplace_back(x, k);
    }
    if (spec.is_finite()) break;
  }
  return out;
}

bool pairwise_coprime_denominators(const std::vector<Rational>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (gcd(atoms[i].den(), atoms[j].den()) != 1) return false;
    }
  }
  return true;
}

}  // namespace

CertificateResult verify_finitary_certificate(const PuiseuxSpec& spec, const Integer& n,
                                              std::vector<Rational> s, const Rational& x_bound,
                                              std::size_t depth) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (s.empty()) throw DomainError("S must be nonempty");
  if (depth == 0) throw DomainError("depth must be at least 1");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (const auto& e : s) {
    if (e.is_zero()) throw DomainError("S must consist of nonzero elements");
    const MembershipAnswer a = member(spec, e, depth);
    if (!a.yes()) {
      throw DomainError(e.to_string() + " in S is not verified to be an element of M (" +
                        std::string(to_string(a.verdict)) + ")");
    }
  }

  const auto elements = depth_major_elements(spec, x_bound, depth);
  std::vector<SweepOutcome> outcomes(elements.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  const std::size_t chunk = (elements.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < elements.size(); begin += chunk) {
    const std::size_t end = std::min(elements.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        outcomes[i] = check_element(spec, n, s, elements[i].first, depth);
      }
    }));
  }
  for (auto& j : jobs) j.get();

  CertificateScope scope{x_bound, depth, elements.size()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!outcomes[i].ok) {
      return FailureWitness{n,      s, scope, elements[i].first, elements[i].second,
                            outcomes[i].undecided, outcomes[i].reason};
    }
  }
  FinitaryCertificate cert{n, s, scope, {}};
  cert.checks.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    cert.checks.push_back({elements[i].first, outcomes[i].s, std::move(outcomes[i].remainder)});
  }
  return cert;
}

PowerCertificate mcyclic_certificate(const Rational& r, std::size_t max_power) {
  if (r <= Rational(1)) {
    throw DomainError("the certificate needs r > 1, got " + r.to_string());
  }
  const Integer nr = r.num();
  const Integer dr = r.den();
  PowerCertificate cert{dr, {Rational(nr)}, {}};
  for (std::size_t j = 1; j <= max_power; ++j) {
    PowerCertificate::Identity id;
    id.j = j;
    id.lhs = Rational(nr) * pow(r, static_cast<std::int64_t>(j)) - Rational(nr);
    for (std::size_t i = 0; i < j; ++i) {
      id.rhs.add(pow(r, static_cast<std::int64_t>(i + 1)), nr - dr);
    }
    if (id.rhs.evaluate() != id.lhs) {
      throw std::logic_error("power identity fails at j = " + std::to_string(j));
    }
    cert.identities.push_back(std::move(id));
  }
  return cert;
}

ConstructionReport build_primary_construction(const Integer& p, const Integer& q, const Polynomial& f,
                                              std::vector<NumericalMonoid> sn, std::size_t depth) {
  if (depth == 0) throw DomainError("depth must be at least 1");
  PuiseuxSpec spec = PuiseuxSpec::primary_construction(p, q, f, std::move(sn));
  const auto& pc = std::get<PrimaryConstruction>(spec.variant());
  std::vector<InequalityRow> rows;
  for (std::size_t n = 1; n <= depth; ++n) {
    const Integer nn(static_cast<unsigned long>(n));
    const Integer df = f(nn + 1) - f(nn);
    if (!df.fits_ulong_p()) throw DomainError("exponent difference too large at level " + std::to_string(n));
    InequalityRow row;
    row.level = n;
    Integer qd;
    Integer pn;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), df.get_ui());
    mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), n);
    row.lhs = qd - pn;
    const NumericalMonoid& level = pc.level(n);
    const std::int64_t frob = level.frobenius();
    const std::uint64_t largest_atom = level.generators().back();
    const Integer bound = frob > 0 && static_cast<std::uint64_t>(frob) > largest_atom
                              ? Integer(static_cast<unsigned long>(frob))
                              : Integer(static_cast<unsigned long>(largest_atom));
    row.rhs = p * bound;
    row.holds = row.lhs > row.rhs;
    rows.push_back(row);
    if (!row.holds) {
      throw ConstructionError(n, "growth inequality fails at n = " + std::to_string(n) + ": " +
                                     row.lhs.get_str() + " <= " + row.rhs.get_str());
    }
  }
  std::set<Rational> s;
  std::size_t cert_depth = depth;
  for (;; --cert_depth) {
    try {
      for (const auto& a : integer_part_atoms(truncation_generators(spec, cert_depth))) {
        s.insert(Rational(a));
      }
      break;
    } catch (const DomainError&) {
      if (cert_depth == 1) throw;
    }
  }
  for (auto a : pc.sn.front().generators()) {
    s.insert(Rational(q * Integer(static_cast<unsigned long>(a))));
  }
  return ConstructionReport{std::move(spec), std::move(rows), p,
                            std::vector<Rational>(s.begin(), s.end()), cert_depth};
}

RefutationResult refute_strongly_primary(const PuiseuxSpec& spec, const Integer& n,
                                         std::vector<Rational> s, std::size_t scan_cap) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (s.empty()) throw DomainError("S must be nonempty");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (const auto& e : s) {
    if (e.is_zero()) throw DomainError("S must consist of nonzero elements");
  }

  // The atoms in enumeration order, either all of them or lazily.
  std::vector<Rational> finite;
  const PrimeReciprocal* family = nullptr;
  if (spec.is_finite()) {
    finite = minimal_generators(spec.as_finite().generators);
    if (!pairwise_coprime_denominators(finite)) {
      throw DomainError("atom denominators are not pairwise coprime; the valuation argument does not apply");
    }
  } else if (const auto* pr = std::get_if<PrimeReciprocal>(&spec.variant())) {
    family = pr;
  } else {
    throw DomainError("refutation needs a prime family or a finite spec with coprime denominators");
  }
  for (const auto& e : s) {
    const MembershipAnswer a = member(spec, e);
    if (!a.yes()) throw DomainError(e.to_string() + " in S is not an element of M");
  }

  Integer threshold = n;
  for (const auto& e : s) threshold = std::max(threshold, e.den());
  const std::size_t limit = family ? scan_cap : finite.size();
  for (std::size_t k = 1; k <= limit; ++k) {
    const Rational a = family ? family->generator_for(family->prime(k)) : finite[k - 1];
    const Integer d = a.den();
    if (d <= threshold) continue;
    const bool coprime = std::all_of(s.begin(), s.end(), [&](const Rational& e) { return gcd(e.den(), d) == 1; });
    if (!coprime) continue;
    std::string argument =
        "if n*a = s + sum c_i a_i, reducing modulo the denominator " + d.get_str() +
        " (coprime to every other atom denominator and to d(s)) forces " + d.get_str() +
        " | n - c_a; as n < " + d.get_str() + " this gives c_a = n and s = 0, impossible";
    return ValuationRefutation{n, s, a, d, k, std::move(argument)};
  }
  return NotRefuted{n, s, limit,
                    "no atom has a denominator above max{n, max d(S)} = " + threshold.get_str() +
                        " that is coprime to d(S)"};
}

}  // namespace puiseux
