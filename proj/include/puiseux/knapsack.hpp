#pragma once

// Integer knapsack over nonnegative coefficients: decide, witness and
// enumerate solutions of sum c_i * w_i = t. Every rational membership or
// factorization query is reduced to this after clearing denominators.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux::knapsack {

using Coefficients = std::vector<Integer>;

/// Least element of <weights> in each residue class modulo `modulus`,
/// computed with the round-robin shortest-path sweep. `last` records the
/// weight index that produced each entry so witnesses can be rebuilt.
struct AperyTable {
  static constexpr unsigned __int128 kUnreachable = ~static_cast<unsigned __int128>(0);

  std::uint64_t modulus = 0;
  std::vector<unsigned __int128> least;
  std::vector<std::int32_t> last;

  bool reachable(std::uint64_t residue) const { return least[residue] != kUnreachable; }
};

AperyTable round_robin(std::span<const std::uint64_t> weights, std::uint64_t modulus);

/// Solver for a fixed positive weight vector. Cheap to copy; lazily built
/// tables are shared between copies and safe under concurrent use.
class Solver {
 public:
  explicit Solver(std::vector<Integer> weights);

  const std::vector<Integer>& weights() const { return weights_; }

  /// One solution, or nullopt when the target is not representable.
  std::optional<Coefficients> solve(const Integer& target) const;
  bool feasible(const Integer& target) const { return solve(target).has_value(); }

  /// Visits every solution exactly once. Enumeration runs over the weights
  /// in descending order, depth first, pruned by the remaining value and
  /// the gcd of the unvisited weights. Returning false from `visit` stops.
  void for_each_solution(const Integer& target,
                         const std::function<bool(const Coefficients&)>& visit) const;

  /// Membership bitmap of the cleared lattice 0..limit.
  std::vector<bool> reachable_up_to(std::uint64_t limit) const;

 private:
  struct Shared;

  std::optional<Coefficients> solve_dfs(const Integer& target) const;
  std::optional<Coefficients> solve_dp(std::uint64_t target) const;
  std::optional<Coefficients> solve_apery(std::uint64_t target) const;

  std::vector<Integer> weights_;
  Integer gcd_;
  std::vector<std::size_t> order_;      // indices by descending weight
  std::vector<Integer> suffix_gcd_;     // gcd of weights order_[i..]
  bool small_ = false;                  // reduced weights fit in 62 bits
  std::vector<std::uint64_t> reduced_;  // weights / gcd when small_
  std::shared_ptr<Shared> shared_;
};

/// Convenience: is x in the submonoid of N0 generated by `gens`?
bool in_monoid(std::span<const std::uint64_t> gens, std::uint64_t x);

}  // namespace puiseux::knapsack
