#include "puiseux/homs.hpp"

#include <algorithm>
#include <set>

#include "puiseux/errors.hpp"
#include "puiseux/factor.hpp"

namespace puiseux {

namespace {

const Geometric* as_geometric(const PuiseuxSpec& spec) { return std::get_if<Geometric>(&spec.variant()); }

bool same_family_power(const Rational& q, const Geometric& m, const Geometric& n) {
  if (m.ratio != n.ratio || m.ratio == Rational(1)) return false;
  const ShiftTest t = index_shift(m.ratio, q);
  if (!t.shift) return false;
  if (n.biinfinite) return true;
  if (m.biinfinite) return false;
  return m.from + *t.shift >= n.from;
}

bool is_atom_of(const std::vector<Rational>& atoms, const Rational& x) {
  return std::binary_search(atoms.begin(), atoms.end(), x);
}

}  // namespace

std::string_view to_string(HomVerdict v) {
  switch (v) {
    case HomVerdict::Valid:
      return "valid";
    case HomVerdict::Invalid:
      return "invalid";
    case HomVerdict::ValidAtDepth:
      return "validAtDepth";
    case HomVerdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

HomCheck check_hom(const Rational& q, const PuiseuxSpec& domain, const PuiseuxSpec& codomain,
                   std::size_t depth) {
  HomCheck out;
  if (q.is_zero()) {
    out.verdict = HomVerdict::Valid;
    out.reason = "multiplication by 0 is the trivial homomorphism";
    return out;
  }
  if (depth == 0) throw DomainError("depth must be at least 1");
  const Geometric* gm = as_geometric(domain);
  const Geometric* gn = as_geometric(codomain);
  if (gm && gn && same_family_power(q, *gm, *gn)) {
    out.verdict = HomVerdict::Valid;
    out.reason = "q is a power of r shifting the exponent range into the codomain's";
    return out;
  }
  const auto gens = truncation_generators(domain, depth);
  std::optional<Rational> undecided;
  for (const auto& g : gens) {
    const MembershipAnswer a = member(codomain, q * g, depth);
    if (a.no()) {
      out.verdict = HomVerdict::Invalid;
      out.witness = g;
      out.reason = "q*" + g.to_string() + " = " + (q * g).to_string() + " is not in N: " + a.reason;
      return out;
    }
    if (a.unknown() && !undecided) undecided = g;
  }
  out.depth = domain.is_finite() ? 0 : depth;
  if (undecided) {
    out.verdict = HomVerdict::Unknown;
    out.witness = undecided;
    out.reason = "membership of q*" + undecided->to_string() + " in N is undecided at depth " +
                 std::to_string(depth);
    return out;
  }
  if (domain.is_finite()) {
    out.verdict = HomVerdict::Valid;
    out.reason = "q*g lies in N for every generator g of M";
  } else {
    out.verdict = HomVerdict::ValidAtDepth;
    out.reason = "q*g lies in N for the first " + std::to_string(depth) + " generators of M";
  }
  return out;
}

TransferCheck is_transfer(const Rational& q, const PuiseuxSpec& domain, const PuiseuxSpec& codomain) {
  const auto& m = domain.as_finite();
  const auto& n = codomain.as_finite();
  TransferCheck out;
  if (q.is_zero()) {
    out.reason = "q = 0 sends every nonzero element to 0, so the preimage of 0 is not {0}";
    return out;
  }
  const HomCheck h = check_hom(q, domain, codomain);
  if (h.verdict != HomVerdict::Valid) {
    throw DomainError("q = " + q.to_string() + " is not a homomorphism M -> N: " + h.reason);
  }
  const FiniteMonoid fm(m.generators);
  for (const auto& b : minimal_generators(n.generators)) {
    if (!fm.contains(b / q)) {
      out.witness = b;
      out.reason = b.to_string() + " is an atom of N but " + (b / q).to_string() + " is not in M";
      return out;
    }
  }
  out.transfer = true;
  out.reason = "q*M = N: every atom of N divided by q lies in M";
  return out;
}

TransferReport verify_transfer_properties(const Rational& q, const PuiseuxSpec& domain,
                                          const PuiseuxSpec& codomain,
                                          const std::vector<Rational>& samples) {
  const TransferCheck t = is_transfer(q, domain, codomain);
  if (!t.transfer) throw DomainError("not a transfer homomorphism: " + t.reason);
  const auto atoms_m = minimal_generators(domain.as_finite().generators);
  const auto atoms_n = minimal_generators(codomain.as_finite().generators);
  const FiniteMonoid fm(atoms_m);
  TransferReport report;
  for (const auto& x : samples) {
    TransferSample s;
    s.x = x;
    if (!fm.contains(x)) {
      s.skipped = true;
      s.note = x.to_string() + " is not in M";
      report.samples.push_back(std::move(s));
      continue;
    }
    const Rational y = q * x;
    s.atom_in_domain = is_atom_of(atoms_m, x);
    s.atom_in_codomain = is_atom_of(atoms_n, y);
    s.lengths_domain = length_set(atoms_m, x);
    s.lengths_codomain = length_set(atoms_n, y);
    s.ok = s.atom_in_domain == s.atom_in_codomain && s.lengths_domain == s.lengths_codomain;
    if (!s.ok) report.all_ok = false;
    report.samples.push_back(std::move(s));
  }
  return report;
}

std::optional<Rational> infer_multiplier(const std::vector<Rational>& gens,
                                         const std::vector<Rational>& images) {
  if (gens.size() != images.size()) throw DomainError("generator and image lists differ in length");
  if (gens.empty()) return std::nullopt;
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("generators must be positive");
  }
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[0] * images[i] != gens[i] * images[0]) return std::nullopt;
  }
  return images[0] / gens[0];
}

ShiftTest index_shift(const Rational& r, const Rational& s) {
  if (r.is_zero() || r == Rational(1)) throw DomainError("ratio must be positive and different from 1");
  if (s.is_zero()) return {std::nullopt, "0 is not a power of r"};
  std::set<Integer> primes;
  for (auto& p : prime_divisors(r.num())) primes.insert(p);
  for (auto& p : prime_divisors(r.den())) primes.insert(p);
  for (const Integer* part : {&s.num(), &s.den()}) {
    for (auto& p : prime_divisors(*part)) {
      if (!primes.count(p)) {
        return {std::nullopt, "prime " + p.get_str() + " divides s but not n(r) d(r)"};
      }
    }
  }
  std::optional<std::int64_t> k;
  for (const auto& p : primes) {
    const std::int64_t vr = padic_valuation(p, r).value;
    const std::int64_t vs = padic_valuation(p, s).value;
    if (vs % vr != 0) {
      return {std::nullopt, "v_" + p.get_str() + "(s) = " + std::to_string(vs) +
                                " is not a multiple of v_" + p.get_str() + "(r) = " + std::to_string(vr)};
    }
    if (!k) {
      k = vs / vr;
    } else if (*k != vs / vr) {
      return {std::nullopt, "v_" + p.get_str() + "(s) = " + std::to_string(vs) + " but k*v_" +
                                p.get_str() + "(r) = " + std::to_string(*k * vr) +
                                " for the k = " + std::to_string(*k) + " fixed by another prime"};
    }
  }
  if (pow(r, *k) != s) throw std::logic_error("valuation fingerprint disagrees with r^k");
  return {k, "s = r^" + std::to_string(*k)};
}

AutomorphismSearch automorphism_search(const PuiseuxSpec& spec, std::size_t window) {
  const Geometric* g = as_geometric(spec);
  if (!g || !g->biinfinite) throw DomainError("automorphism search needs a bi-infinite geometric spec");
  const Rational& r = g->ratio;
  if (r.num() == 1 || r.den() == 1) {
    throw DomainError("automorphism search needs n(r) > 1 and d(r) > 1, got r = " + r.to_string());
  }
  if (window == 0) throw DomainError("window must be at least 1");
  const auto k_max = static_cast<std::int64_t>(window);

  std::set<Rational> candidates;
  Integer bound = 1;
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    const Rational rk = pow(r, k);
    candidates.insert(rk);
    bound = std::max({bound, rk.num(), rk.den()});
  }
  if (bound > 4096) throw DomainError("window too large: rational candidates up to " + bound.get_str());
  const unsigned long b = bound.get_ui();
  for (unsigned long num = 1; num <= b; ++num) {
    for (unsigned long den = 1; den <= b; ++den) {
      candidates.insert(Rational::normalize(Integer(num), Integer(den)));
    }
  }

  AutomorphismSearch out;
  out.candidates_tested = candidates.size();
  for (const auto& s : candidates) {
    const ShiftTest t = index_shift(r, s);
    if (!t.shift) {
      out.rejected.emplace_back(s, "not a power of r: " + t.reason);
      continue;
    }
    const std::int64_t k = *t.shift;
    if (k > k_max || k < -k_max) {
      out.rejected.emplace_back(s, "r^" + std::to_string(k) + " lies outside the window");
      continue;
    }
    // Spot check: s sends the window atoms onto generators of the wider truncation.
    const auto depth = static_cast<std::size_t>(k_max + (k < 0 ? -k : k));
    auto wide = truncation_generators(spec, depth);
    std::sort(wide.begin(), wide.end());
    bool lands = true;
    for (std::int64_t n = -k_max; n <= k_max && lands; ++n) {
      lands = std::binary_search(wide.begin(), wide.end(), s * pow(r, n));
    }
    if (!lands) throw std::logic_error("power of r failed the truncation spot check");
    out.multipliers.push_back(s);
    out.shifts.push_back(k);
  }
  return out;
}

int parity(const Rational& x) { return mpz_odd_p(x.num().get_mpz_t()) ? 1 : 0; }

ParityFixture parity_hom_fixture() {
  const PuiseuxSpec spec = PuiseuxSpec::prime_reciprocal(PrimeForm::Reciprocal, PrimeFilter::Odd);
  const FiniteMonoid window(truncation_generators(spec, 4));
  auto elements = window.elements_up_to(Rational::normalize(1, 1));
  if (elements.size() > 40) elements.resize(40);
  ParityFixture out;
  bool hit_zero = false;
  bool hit_one = false;
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      ParityFixture::Check c{x, y, parity(x), parity(y), parity(x + y)};
      if (c.theta_sum != (c.theta_x + c.theta_y) % 2) out.additive = false;
      (c.theta_x ? hit_one : hit_zero) = true;
      out.checks.push_back(c);
    }
  }
  out.surjective = hit_zero && hit_one;
  out.kernel_witness = Rational::normalize(2, 3);
  if (parity(out.kernel_witness) != 0 || !member(spec, out.kernel_witness).yes()) {
    throw std::logic_error("parity kernel witness is not a nonzero element of even numerator");
  }
  return out;
}

}  // namespace puiseux
