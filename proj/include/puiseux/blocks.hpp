#pragma once

// Finite abelian groups as products of cyclic groups, sequences over them,
// minimal zero-sum sequences (atoms of block monoids), Davenport constants,
// and the prefix scan that finds the first term generated by its
// predecessors.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/factorization.hpp"

namespace puiseux {

using GroupElement = std::vector<std::uint64_t>;

class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> orders);

  const std::vector<std::uint64_t>& orders() const { return orders_; }
  std::uint64_t order() const { return order_; }
  GroupElement zero() const { return GroupElement(orders_.size(), 0); }

  /// Throws DomainError when e has the wrong rank or a component out of range.
  void validate(const GroupElement& e) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  /// All elements in lexicographic order.
  std::vector<GroupElement> elements() const;
  /// Mixed-radix index of an element in elements().
  std::size_t index_of(const GroupElement& e) const;

  std::string element_to_string(const GroupElement& e) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;
};

/// A finite multiset of group elements.
class GSequence {
 public:
  GSequence() = default;
  explicit GSequence(const std::vector<GroupElement>& terms);

  void add(const GroupElement& g, std::uint64_t count = 1);
  const std::map<GroupElement, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t length() const;
  bool empty() const { return counts_.empty(); }
  std::vector<GroupElement> support() const;
  /// Terms in nondecreasing order, repeated by multiplicity.
  std::vector<GroupElement> terms() const;
  /// Whether `other` is a subsequence (multiplicity-wise) of this one.
  bool contains(const GSequence& other) const;
  GSequence minus(const GSequence& other) const;

  friend bool operator==(const GSequence&, const GSequence&) = default;
  /// Shorter sequences first, then lexicographic on terms().
  friend bool operator<(const GSequence& a, const GSequence& b);

 private:
  std::map<GroupElement, std::uint64_t> counts_;
};

/// A sequence whose sum is zero; atoms of B(G0) are minimal ones.
using ZeroSumSequence = GSequence;

GroupElement sigma(const FiniteAbelianGroup& group, const GSequence& x);
bool is_block(const FiniteAbelianGroup& group, const std::vector<GroupElement>& subset,
              const GSequence& x);

/// Minimal zero-sum sequences over the subset, sorted.
std::vector<ZeroSumSequence> block_atoms(const FiniteAbelianGroup& group,
                                         const std::vector<GroupElement>& subset);
std::uint64_t davenport(const FiniteAbelianGroup& group);

/// A factorization in B(G0): atoms in nondecreasing order.
using BlockFactorization = std::vector<ZeroSumSequence>;

std::vector<BlockFactorization> block_factorizations(const FiniteAbelianGroup& group,
                                                     const std::vector<GroupElement>& subset,
                                                     const GSequence& x);
LengthSet block_length_set(const FiniteAbelianGroup& group,
                           const std::vector<GroupElement>& subset, const GSequence& x);

/// Pull interface: each call yields the next term, nullopt when exhausted.
using TermSource = std::function<std::optional<std::uint64_t>()>;

struct Stabilization {
  std::size_t m = 0;                       // a_{m+1} ∈ <a_1, ..., a_m>
  std::vector<std::uint64_t> terms;        // a_1, ..., a_{m+1}
  std::vector<std::uint64_t> coefficients; // a_{m+1} = Σ c_i a_i, i <= m
};

/// The least such m. Throws ScanCapError when m would exceed `cap`, and
/// DomainError on a zero term or an exhausted source.
Stabilization gcd_stabilization(const TermSource& next, std::size_t cap = 100);
TermSource from_list(std::vector<std::uint64_t> terms);

}  // namespace puiseux
