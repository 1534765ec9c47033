#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace puiseux {

/// A cofinite submonoid of N0, stored by its unique minimal generating set.
///
/// Membership answers are memoized in a table shared between copies of the
/// same monoid; the table only ever grows, so concurrent readers and
/// fillers always agree.
class NumericalMonoid {
 public:
  /// Minimalizes `gens` after dividing by their gcd d; returns the monoid
  /// together with d (so the input generates d times the result).
  static std::pair<NumericalMonoid, std::uint64_t> from_generators(
      std::span<const std::uint64_t> gens);

  /// Requires gcd(gens) = 1; non-minimal input is minimalized.
  explicit NumericalMonoid(std::span<const std::uint64_t> gens);
  NumericalMonoid(std::initializer_list<std::uint64_t> gens);

  /// N0 = <1>.
  static NumericalMonoid naturals();

  const std::vector<std::uint64_t>& generators() const { return gens_; }
  std::uint64_t multiplicity() const { return gens_.front(); }
  bool is_proper() const { return gens_.front() != 1; }

  bool contains(std::uint64_t x) const;

  /// Largest integer outside the monoid; -1 for N0.
  std::int64_t frobenius() const;

  /// Least element of each residue class mod m. Throws DomainError unless
  /// m is a positive element.
  std::vector<std::uint64_t> apery_set(std::uint64_t m) const;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.gens_ == b.gens_;
  }

 private:
  struct Cache;
  struct MinimalTag {};
  NumericalMonoid(MinimalTag, std::vector<std::uint64_t> minimal);

  std::vector<std::uint64_t> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace puiseux
