#pragma once

#include <map>
#include <set>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// A formal sum of atoms: atom -> positive multiplicity.
class Factorization {
 public:
  Factorization() = default;

  /// Adds `count` copies of `atom`; zero counts are ignored.
  void add(const Rational& atom, const Integer& count = 1);

  const std::map<Rational, Integer>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  Integer length() const;
  Rational evaluate() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend bool operator<(const Factorization& a, const Factorization& b) {
    return a.counts_ < b.counts_;
  }

 private:
  std::map<Rational, Integer> counts_;
};

/// Sorted set of factorization lengths.
class LengthSet {
 public:
  LengthSet() = default;
  explicit LengthSet(std::set<Integer> values) : values_(std::move(values)) {}

  void insert(const Integer& n) { values_.insert(n); }
  const std::set<Integer>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const Integer& min() const { return *values_.begin(); }
  const Integer& max() const { return *values_.rbegin(); }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  std::set<Integer> values_;
};

}  // namespace puiseux
