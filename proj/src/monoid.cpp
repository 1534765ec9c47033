#include "puiseux/monoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

constexpr std::size_t kLevelScanCap = 64;
constexpr std::uint64_t kLatticeSweepLimit = std::uint64_t{1} << 28;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Integer> to_integers(const std::vector<Rational>& gens, const Integer& scale) {
  std::vector<Integer> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.num() * (scale / g.den()));
  return out;
}

Integer denominator_lcm(const std::vector<Rational>& gens) {
  Integer l = 1;
  for (const auto& g : gens) l = lcm(l, g.den());
  return l;
}

std::uint64_t to_u64(const Integer& n) {
  if (!n.fits_ulong_p()) throw DomainError("value " + n.get_str() + " exceeds 64 bits");
  return n.get_ui();
}

MembershipAnswer answer_yes(Factorization f, std::string reason) {
  MembershipAnswer a;
  a.verdict = MembershipAnswer::Verdict::Yes;
  a.witness = std::move(f);
  a.reason = std::move(reason);
  return a;
}

MembershipAnswer answer_no(std::string reason) {
  MembershipAnswer a;
  a.verdict = MembershipAnswer::Verdict::No;
  a.reason = std::move(reason);
  return a;
}

MembershipAnswer answer_unknown(std::size_t depth, std::string reason) {
  MembershipAnswer a;
  a.verdict = MembershipAnswer::Verdict::Unknown;
  a.depth_searched = depth;
  a.reason = std::move(reason);
  return a;
}

MembershipAnswer decide_finite(const std::vector<Rational>& gens, const Rational& x,
                               const std::string& how) {
  if (gens.empty()) return answer_no("every generator exceeds " + x.to_string());
  const FiniteMonoid m(minimal_generators(gens));
  if (auto f = m.represent(x)) return answer_yes(std::move(*f), how);
  return answer_no(how + ": no nonnegative solution");
}

/// Primes that can divide the denominator of some element of the spec.
std::optional<std::vector<Integer>> denominator_primes(const PuiseuxSpec& spec) {
  return std::visit(
      Overloaded{
          [](const FiniteGen&) -> std::optional<std::vector<Integer>> { return std::nullopt; },
          [](const Geometric& g) -> std::optional<std::vector<Integer>> {
            std::set<Integer> primes;
            // Exponents are unbounded above in every geometric family.
            for (auto& p : prime_divisors(g.ratio.den())) primes.insert(p);
            if (g.biinfinite || g.from < 0) {
              for (auto& p : prime_divisors(g.ratio.num())) primes.insert(p);
            }
            return std::vector<Integer>(primes.begin(), primes.end());
          },
          [](const PrimeReciprocal&) -> std::optional<std::vector<Integer>> {
            return std::nullopt;
          },
          [](const PrimaryConstruction& pc) -> std::optional<std::vector<Integer>> {
            if (pc.p == 1) return std::vector<Integer>{};
            return prime_divisors(pc.p);
          }},
      spec.variant());
}

MembershipAnswer search_truncations(const PuiseuxSpec& spec, const Rational& x,
                                    std::size_t depth_limit) {
  if (auto primes = denominator_primes(spec)) {
    for (const auto& p : prime_divisors(x.den())) {
      if (std::find(primes->begin(), primes->end(), p) == primes->end()) {
        return answer_no("valuation: prime " + p.get_str() +
                         " divides d(x) but no element of M has it in its denominator");
      }
    }
  }
  for (std::size_t depth = 1; depth <= depth_limit; ++depth) {
    const FiniteMonoid m(truncation_generators(spec, depth));
    if (auto f = m.represent(x)) {
      return answer_yes(std::move(*f), "found in truncation at depth " + std::to_string(depth));
    }
  }
  return answer_unknown(depth_limit, "not found in truncations up to depth " +
                                         std::to_string(depth_limit));
}

/// Membership in <g(p) : p admissible> by p-adic bookkeeping: each
/// denominator prime p of x pins the multiplicity of g(p) modulo p, and
/// what remains is an integer that must lie in <n(g(p))>.
MembershipAnswer decide_prime_family(const PrimeReciprocal& pr, const Rational& x) {
  Rational forced;
  Factorization witness;
  Integer rest = x.den();
  for (const auto& p : prime_divisors(x.den())) {
    if (!pr.admissible(p)) {
      return answer_no("valuation: prime " + p.get_str() + " is not an admissible denominator");
    }
    const std::int64_t e = padic_valuation(p, x.den());
    if (e > 1) {
      return answer_no("valuation: " + p.get_str() + "^" + std::to_string(e) +
                       " divides d(x) but each generator contributes at most one factor " +
                       p.get_str());
    }
    // c * n(g(p)) ≡ n(x) * (d(x)/p)^{-1} (mod p)
    const Integer w = x.den() / p;
    Integer inv_w;
    Integer inv_n;
    mpz_invert(inv_w.get_mpz_t(), Integer(w % p).get_mpz_t(), p.get_mpz_t());
    mpz_invert(inv_n.get_mpz_t(), Integer(pr.numerator_for(p) % p).get_mpz_t(), p.get_mpz_t());
    Integer c = (x.num() % p) * inv_w % p * inv_n % p;
    const Rational g = pr.generator_for(p);
    forced += Rational(c) * g;
    witness.add(g, c);
    rest /= p;
  }
  const auto remainder = difference(x, forced);
  if (!remainder) {
    return answer_no("valuation: forced multiplicities already sum to " + forced.to_string() +
                     " > " + x.to_string());
  }
  if (!remainder->is_integer()) throw std::logic_error("prime-family remainder is not integral");
  const Integer y = remainder->num();
  const std::string how = "valuation decomposition";
  if (sgn(y) == 0) return answer_yes(std::move(witness), how);

  // p * g(p) = n(g(p)) is an integer in M for every admissible p.
  switch (pr.form) {
    case PrimeForm::Reciprocal: {
      const Integer p0 = pr.prime(1);
      witness.add(pr.generator_for(p0), p0 * y);
      return answer_yes(std::move(witness), how);
    }
    case PrimeForm::PredecessorOverPrime: {
      if (pr.primes == PrimeFilter::All) {
        witness.add(pr.generator_for(2), 2 * y);
        return answer_yes(std::move(witness), how);
      }
      if (y % 2 != 0) {
        return answer_no("valuation: integer remainder " + y.get_str() +
                         " is odd but every p-1 with p odd is even");
      }
      witness.add(pr.generator_for(3), 3 * (y / 2));
      return answer_yes(std::move(witness), how);
    }
    case PrimeForm::SquarePlusOneOverPrime: {
      std::vector<Integer> primes;
      std::vector<Integer> weights;
      for (std::size_t k = 1;; ++k) {
        const Integer p = pr.prime(k);
        const Integer n = pr.numerator_for(p);
        if (n > y) break;
        primes.push_back(p);
        weights.push_back(n);
      }
      if (weights.empty()) {
        return answer_no("valuation: integer remainder " + y.get_str() +
                         " is below every p^2+1");
      }
      const auto c = knapsack::Solver(weights).solve(y);
      if (!c) {
        return answer_no("valuation: integer remainder " + y.get_str() +
                         " is not a sum of numbers p^2+1");
      }
      for (std::size_t i = 0; i < primes.size(); ++i) {
        witness.add(pr.generator_for(primes[i]), (*c)[i] * primes[i]);
      }
      return answer_yes(std::move(witness), how);
    }
  }
  throw std::logic_error("unhandled prime form");
}

/// All generators of the construction that are <= bound, or nullopt when
/// the level minima are not seen to exceed the bound for good within the
/// scan cap. Level minima are at least q^f(n)/p^n, which grows from level n
/// on as soon as q^(f(n+1)-f(n)) > p (the differences of f never shrink).
std::optional<std::vector<Rational>> construction_generators_up_to(const PrimaryConstruction& pc,
                                                                   const Rational& bound) {
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= kLevelScanCap; ++n) {
    const Integer nn(static_cast<unsigned long>(n));
    const Integer fn = pc.f(nn);
    const Integer df = pc.f(nn + 1) - fn;
    if (!fn.fits_ulong_p() || !df.fits_ulong_p()) return std::nullopt;
    Integer qf;
    Integer pn;
    Integer qd;
    mpz_pow_ui(qf.get_mpz_t(), pc.q.get_mpz_t(), fn.get_ui());
    mpz_pow_ui(pn.get_mpz_t(), pc.p.get_mpz_t(), n);
    mpz_pow_ui(qd.get_mpz_t(), pc.q.get_mpz_t(), df.get_ui());
    const Rational floor_n = Rational::normalize(qf, pn);
    if (floor_n > bound && qd > pc.p) return out;
    for (auto& g : pc.level_generators(n)) {
      if (g <= bound) out.push_back(g);
    }
  }
  return std::nullopt;
}

std::vector<Rational> verified_atoms(const std::vector<Rational>& candidates) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<Rational> others;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j != i) others.push_back(candidates[j]);
    }
    if (!others.empty() && FiniteMonoid(others).contains(candidates[i])) {
      throw std::logic_error("closed-form atom " + candidates[i].to_string() +
                             " is not an atom of its truncation");
    }
    out.push_back(candidates[i]);
  }
  return sorted_unique(std::move(out));
}

bool geometric_atomic(const Geometric& g) { return g.ratio.num() > 1 && g.ratio.den() > 1; }

}  // namespace

std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::False:
      return "false";
    case Tristate::True:
      return "true";
    case Tristate::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(MembershipAnswer::Verdict v) {
  switch (v) {
    case MembershipAnswer::Verdict::Yes:
      return "yes";
    case MembershipAnswer::Verdict::No:
      return "no";
    case MembershipAnswer::Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

FiniteMonoid::FiniteMonoid(std::vector<Rational> generators)
    : gens_(sorted_unique(std::move(generators))),
      scale_(denominator_lcm(gens_)),
      solver_([&] {
        if (gens_.empty()) throw DomainError("finite monoid needs at least one generator");
        if (gens_.front().is_zero()) throw DomainError("generators must be strictly positive");
        return to_integers(gens_, scale_);
      }()) {}

std::optional<Integer> FiniteMonoid::cleared(const Rational& x) const {
  const Integer t = x.num() * scale_;
  if (t % x.den() != 0) return std::nullopt;
  return Integer(t / x.den());
}

Factorization FiniteMonoid::to_factorization(const knapsack::Coefficients& c) const {
  Factorization f;
  for (std::size_t i = 0; i < gens_.size(); ++i) f.add(gens_[i], c[i]);
  return f;
}

std::optional<Factorization> FiniteMonoid::represent(const Rational& x) const {
  const auto t = cleared(x);
  if (!t) return std::nullopt;
  if (auto c = solver_.solve(*t)) return to_factorization(*c);
  return std::nullopt;
}

void FiniteMonoid::for_each_factorization(
    const Rational& x, const std::function<bool(const Factorization&)>& visit) const {
  const auto t = cleared(x);
  if (!t) return;
  solver_.for_each_solution(*t, [&](const knapsack::Coefficients& c) {
    return visit(to_factorization(c));
  });
}

std::vector<Rational> FiniteMonoid::elements_up_to(const Rational& bound) const {
  const Integer limit = bound.num() * scale_ / bound.den();
  if (limit > kLatticeSweepLimit) {
    throw DomainError("sweep up to " + bound.to_string() + " needs " + limit.get_str() +
                      " lattice points; lower the bound");
  }
  const auto reach = solver_.reachable_up_to(limit.get_ui());
  std::vector<Rational> out;
  for (std::uint64_t v = 0; v < reach.size(); ++v) {
    if (reach[v]) out.push_back(Rational::normalize(Integer(static_cast<unsigned long>(v)), scale_));
  }
  return out;
}

std::vector<Rational> minimal_generators(std::vector<Rational> gens) {
  gens = sorted_unique(std::move(gens));
  std::vector<Rational> kept;
  for (const auto& g : gens) {
    if (g.is_zero()) throw DomainError("generators must be strictly positive");
    // Only strictly smaller generators can add up to g.
    if (kept.empty() || !FiniteMonoid(kept).contains(g)) kept.push_back(g);
  }
  return kept;
}

std::vector<Integer> integer_part_atoms(const std::vector<Rational>& gens) {
  // Elements of <gens> ∩ N0 are the k with k*L in N' = <L*g>, L = lcm d(g).
  // With g' = gcd(N'), c = gcd(g', L): such k are h*j with h = g'/c and
  // j*L' ∈ N'' = N'/g', L' = L/c. H' = {j : j*L' ∈ N''} is numerical and its
  // Apery set w.r.t. m = min N'' follows from that of N''.
  const FiniteMonoid m(gens);
  const Integer scale = m.scale();
  auto weights = to_integers(m.generators(), scale);
  Integer g = 0;
  for (auto& w : weights) g = gcd(g, w);
  std::vector<std::uint64_t> reduced;
  for (auto& w : weights) reduced.push_back(to_u64(w / g));
  const Integer c = gcd(g, scale);
  const Integer h = g / c;
  const std::uint64_t lp = to_u64(scale / c);
  const std::uint64_t mod = *std::min_element(reduced.begin(), reduced.end());
  if (mod > (1u << 20)) throw DomainError("integer part: smallest cleared generator too large");
  const auto table = knapsack::round_robin(reduced, mod);

  using u128 = unsigned __int128;
  std::vector<u128> apery(mod, 0);
  for (std::uint64_t r = 1; r < mod; ++r) {
    const std::uint64_t rho = static_cast<std::uint64_t>((static_cast<u128>(r) * lp) % mod);
    const u128 lower = (table.least[rho] + lp - 1) / lp;
    // least j >= lower with j ≡ r (mod mod)
    const u128 shift = (static_cast<u128>(r) + mod - static_cast<u128>(lower % mod)) % mod;
    apery[r] = lower + shift;
  }
  std::vector<u128> mins;
  for (std::uint64_t i = 1; i < mod; ++i) {
    bool decomposable = false;
    for (std::uint64_t j = 1; j < mod && !decomposable; ++j) {
      if (j == i) continue;
      const std::uint64_t k = (i + mod - j) % mod;
      if (k != 0 && apery[j] + apery[k] == apery[i]) decomposable = true;
    }
    if (!decomposable) mins.push_back(apery[i]);
  }
  std::vector<std::uint64_t> small;
  for (auto v : mins) small.push_back(static_cast<std::uint64_t>(v));
  if (!knapsack::in_monoid(small, mod)) small.push_back(mod);
  std::sort(small.begin(), small.end());
  std::vector<Integer> out;
  for (auto v : small) out.push_back(h * Integer(static_cast<unsigned long>(v)));
  return out;
}

std::vector<Rational> truncation_generators(const PuiseuxSpec& spec, std::size_t depth) {
  if (depth == 0) throw DomainError("truncation depth must be at least 1");
  return std::visit(
      Overloaded{
          [](const FiniteGen& f) { return f.generators; },
          [depth](const Geometric& g) {
            std::vector<Rational> out;
            const auto d = static_cast<std::int64_t>(depth);
            if (g.biinfinite) {
              for (std::int64_t n = -d; n <= d; ++n) out.push_back(pow(g.ratio, n));
            } else {
              for (std::int64_t n = g.from; n < g.from + d; ++n) out.push_back(pow(g.ratio, n));
            }
            return out;
          },
          [depth](const PrimeReciprocal& pr) {
            std::vector<Rational> out;
            for (std::size_t k = 1; k <= depth; ++k) out.push_back(pr.generator_for(pr.prime(k)));
            return out;
          },
          [depth](const PrimaryConstruction& pc) {
            std::vector<Rational> out;
            for (std::size_t n = 1; n <= depth; ++n) {
              for (auto& g : pc.level_generators(n)) out.push_back(g);
            }
            return out;
          }},
      spec.variant());
}

PuiseuxSpec truncate(const PuiseuxSpec& spec, std::size_t depth) {
  return PuiseuxSpec::finite(truncation_generators(spec, depth));
}

MembershipAnswer member(const PuiseuxSpec& spec, const Rational& x, std::size_t depth_limit) {
  if (x.is_zero()) return answer_yes(Factorization{}, "identity element");
  return std::visit(
      Overloaded{
          [&](const FiniteGen& f) { return decide_finite(f.generators, x, "cleared-denominator knapsack"); },
          [&](const Geometric& g) {
            if (g.ratio == Rational(1)) return decide_finite({Rational(1)}, x, "knapsack over <1>");
            if (!g.biinfinite && g.ratio > Rational(1)) {
              std::vector<Rational> gens;
              for (std::int64_t n = g.from;; ++n) {
                Rational a = pow(g.ratio, n);
                if (a > x) break;
                gens.push_back(std::move(a));
              }
              return decide_finite(gens, x, "knapsack over the powers r^n <= x");
            }
            return search_truncations(spec, x, depth_limit);
          },
          [&](const PrimeReciprocal& pr) { return decide_prime_family(pr, x); },
          [&](const PrimaryConstruction& pc) {
            if (auto gens = construction_generators_up_to(pc, x)) {
              return decide_finite(*gens, x, "knapsack over the construction generators <= x");
            }
            return search_truncations(spec, x, depth_limit);
          }},
      spec.variant());
}

std::vector<Rational> atoms_up_to(const PuiseuxSpec& spec, std::size_t depth) {
  if (depth == 0) throw DomainError("depth must be at least 1");
  return std::visit(
      Overloaded{
          [](const FiniteGen& f) { return minimal_generators(f.generators); },
          [&](const Geometric& g) {
            if (g.ratio == Rational(1)) return std::vector<Rational>{Rational(1)};
            if (geometric_atomic(g)) return verified_atoms(truncation_generators(spec, depth));
            if (!g.biinfinite && g.ratio > Rational(1)) {
              return std::vector<Rational>{pow(g.ratio, g.from)};
            }
            throw AtomicityUnknown("atoms of <r^n> with r = " + g.ratio.to_string() +
                                   " are only known when n(r) > 1 and d(r) > 1");
          },
          [&](const PrimeReciprocal&) {
            return verified_atoms(truncation_generators(spec, depth));
          },
          [&](const PrimaryConstruction& pc) {
            std::vector<Rational> out;
            for (const auto& a : minimal_generators(truncation_generators(spec, depth))) {
              // Re-check against every generator of M that could sum to a.
              if (auto below = construction_generators_up_to(pc, a)) {
                std::erase(*below, a);
                if (!below->empty() && FiniteMonoid(*below).contains(a)) continue;
              }
              out.push_back(a);
            }
            return out;
          }},
      spec.variant());
}

Tristate zero_is_limit_point(const PuiseuxSpec& spec) {
  return std::visit(Overloaded{[](const FiniteGen&) { return Tristate::False; },
                               [](const Geometric& g) {
                                 if (g.ratio == Rational(1)) return Tristate::False;
                                 if (g.biinfinite || g.ratio < Rational(1)) return Tristate::True;
                                 return Tristate::False;
                               },
                               [](const PrimeReciprocal& pr) {
                                 return pr.form == PrimeForm::Reciprocal ? Tristate::True
                                                                         : Tristate::False;
                               },
                               [](const PrimaryConstruction&) { return Tristate::False; }},
                    spec.variant());
}

Tristate is_bf_witnessed(const PuiseuxSpec& spec) {
  return zero_is_limit_point(spec) == Tristate::False ? Tristate::True : Tristate::Unknown;
}

std::optional<std::vector<Rational>> finite_atoms(const PuiseuxSpec& spec) {
  return std::visit(
      Overloaded{
          [](const FiniteGen& f) -> std::optional<std::vector<Rational>> {
            return minimal_generators(f.generators);
          },
          [](const Geometric& g) -> std::optional<std::vector<Rational>> {
            if (g.ratio == Rational(1)) return std::vector<Rational>{Rational(1)};
            if (!g.biinfinite && g.ratio > Rational(1) && g.ratio.is_integer()) {
              return std::vector<Rational>{pow(g.ratio, g.from)};
            }
            return std::nullopt;
          },
          [](const PrimeReciprocal&) -> std::optional<std::vector<Rational>> {
            return std::nullopt;
          },
          [](const PrimaryConstruction& pc) -> std::optional<std::vector<Rational>> {
            // With p = 1 every generator q^f(n) a lies in q*S_1, so M = q*S_1.
            if (pc.p != 1) return std::nullopt;
            std::vector<Rational> out;
            for (auto a : pc.sn.front().generators()) {
              out.push_back(Rational(pc.q * Integer(static_cast<unsigned long>(a))));
            }
            return out;
          }},
      spec.variant());
}

Classification classify(const PuiseuxSpec& spec) {
  Classification c;
  const auto atoms = finite_atoms(spec);
  if (!atoms) {
    const bool infinitely_many_atoms = std::visit(
        Overloaded{[](const FiniteGen&) { return false; },
                   [](const Geometric& g) { return geometric_atomic(g); },
                   [](const PrimeReciprocal&) { return true; },
                   [](const PrimaryConstruction&) { return true; }},
        spec.variant());
    c.evidence = infinitely_many_atoms
                     ? "infinitely many atoms: not isomorphic to a numerical monoid, so neither "
                       "transfer finite nor a C-monoid, and not transfer Krull"
                     : "not finitely generated (unbounded denominators): not isomorphic to a "
                       "numerical monoid, so neither transfer finite nor a C-monoid, and not "
                       "transfer Krull";
    return c;
  }
  c.transfer_finite = true;
  c.c_monoid = true;
  if (atoms->size() == 1) {
    c.transfer_krull = true;
    c.krull = true;
    c.evidence = "generated by one element " + atoms->front().to_string() +
                 ": isomorphic to (N0,+), hence Krull and transfer Krull; "
                 "isomorphic to a numerical monoid, hence transfer finite and a C-monoid";
  } else {
    c.evidence = "finitely generated with " + std::to_string(atoms->size()) +
                 " atoms: isomorphic to a proper numerical monoid, hence transfer finite and "
                 "a C-monoid; a transfer Krull Puiseux monoid must be isomorphic to (N0,+)";
  }
  return c;
}

}  // namespace puiseux
