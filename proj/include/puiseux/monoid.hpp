#pragma once

// Operations on Puiseux monoids: truncation, membership, atoms, the
// limit-point and BF predicates, and the classification of transfer
// behaviour.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/knapsack.hpp"
#include "puiseux/spec.hpp"

namespace puiseux {

enum class Tristate { False, True, Unknown };
std::string_view to_string(Tristate t);

/// Exact engine for the monoid generated by a finite list of positive
/// rationals. Elements live in (1/scale)Z where scale is the lcm of the
/// generator denominators; queries are integer knapsacks on that lattice.
class FiniteMonoid {
 public:
  explicit FiniteMonoid(std::vector<Rational> generators);

  /// Sorted ascending, duplicates removed.
  const std::vector<Rational>& generators() const { return gens_; }
  const Integer& scale() const { return scale_; }

  bool contains(const Rational& x) const { return represent(x).has_value(); }
  /// A factorization over generators() evaluating to x.
  std::optional<Factorization> represent(const Rational& x) const;
  /// Every factorization over generators(); return false to stop early.
  void for_each_factorization(const Rational& x,
                              const std::function<bool(const Factorization&)>& visit) const;
  /// Elements <= bound, ascending.
  std::vector<Rational> elements_up_to(const Rational& bound) const;

 private:
  std::optional<Integer> cleared(const Rational& x) const;
  Factorization to_factorization(const knapsack::Coefficients& c) const;

  std::vector<Rational> gens_;
  Integer scale_;
  knapsack::Solver solver_;
};

/// Unique minimal generating set (the atoms) of <gens>, ascending.
std::vector<Rational> minimal_generators(std::vector<Rational> gens);

/// Minimal generators of <gens> ∩ N0, ascending.
std::vector<Integer> integer_part_atoms(const std::vector<Rational>& gens);

/// The first `depth` entries of the family's canonical enumeration
/// (bi-infinite geometric: exponents -depth..depth; construction: every
/// generator of levels 1..depth). Finite specs return their generators.
std::vector<Rational> truncation_generators(const PuiseuxSpec& spec, std::size_t depth);
PuiseuxSpec truncate(const PuiseuxSpec& spec, std::size_t depth);

struct MembershipAnswer {
  enum class Verdict { Yes, No, Unknown };

  Verdict verdict = Verdict::Unknown;
  Factorization witness;         // when Yes
  std::string reason;            // how the verdict was reached
  std::size_t depth_searched = 0;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};
std::string_view to_string(MembershipAnswer::Verdict v);

/// Decides x ∈ M exactly for finite specs, geometric families with r > 1,
/// the prime families and the growth construction; other cases search
/// truncations up to depth_limit and answer No only under a sound
/// exclusion.
MembershipAnswer member(const PuiseuxSpec& spec, const Rational& x, std::size_t depth_limit = 8);

/// Finite specs: the minimal generating set. Families: the closed-form
/// atoms among the generators of truncate(spec, depth), each re-checked as
/// an atom of the truncation. Throws AtomicityUnknown when the family's
/// atomic structure is not established.
std::vector<Rational> atoms_up_to(const PuiseuxSpec& spec, std::size_t depth);

Tristate zero_is_limit_point(const PuiseuxSpec& spec);
/// True when 0 is not a limit point of M•; Unknown otherwise.
Tristate is_bf_witnessed(const PuiseuxSpec& spec);

struct Classification {
  bool transfer_finite = false;
  bool transfer_krull = false;
  bool krull = false;
  bool c_monoid = false;
  std::string evidence;
};

Classification classify(const PuiseuxSpec& spec);

/// Whether the spec describes a finitely generated monoid, and if so its
/// atoms (minimal generators).
std::optional<std::vector<Rational>> finite_atoms(const PuiseuxSpec& spec);

}  // namespace puiseux
