#include "puiseux/blocks.hpp"

#include <algorithm>
#include <memory>

#include "puiseux/errors.hpp"
#include "puiseux/knapsack.hpp"

namespace puiseux {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw DomainError("a group needs at least one cyclic factor");
  for (auto n : orders_) {
    if (n == 0) throw DomainError("cyclic factor orders must be at least 1");
    if (order_ > (std::uint64_t{1} << 24) / n) throw DomainError("group too large for enumeration");
    order_ *= n;
  }
}

void FiniteAbelianGroup::validate(const GroupElement& e) const {
  if (e.size() != orders_.size()) {
    throw DomainError("element " + element_to_string(e) + " has rank " + std::to_string(e.size()) +
                      ", expected " + std::to_string(orders_.size()));
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= orders_[i]) {
      throw DomainError("element " + element_to_string(e) + " has component " + std::to_string(i) +
                        " outside [0, " + std::to_string(orders_[i]) + ")");
    }
  }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) % orders_[i];
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (orders_[i] - a[i]) % orders_[i];
  return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  GroupElement e = zero();
  for (std::uint64_t k = 0; k < order_; ++k) {
    out.push_back(e);
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] < orders_[i]) break;
      e[i] = 0;
    }
  }
  return out;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) idx = idx * orders_[i] + e[i];
  return idx;
}

std::string FiniteAbelianGroup::element_to_string(const GroupElement& e) const {
  if (e.size() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

GSequence::GSequence(const std::vector<GroupElement>& terms) {
  for (const auto& t : terms) add(t);
}

void GSequence::add(const GroupElement& g, std::uint64_t count) {
  if (count == 0) return;
  counts_[g] += count;
}

std::uint64_t GSequence::length() const {
  std::uint64_t n = 0;
  for (const auto& [g, c] : counts_) n += c;
  return n;
}

std::vector<GroupElement> GSequence::support() const {
  std::vector<GroupElement> out;
  for (const auto& [g, c] : counts_) out.push_back(g);
  return out;
}

std::vector<GroupElement> GSequence::terms() const {
  std::vector<GroupElement> out;
  for (const auto& [g, c] : counts_) out.insert(out.end(), c, g);
  return out;
}

bool GSequence::contains(const GSequence& other) const {
  for (const auto& [g, c] : other.counts_) {
    const auto it = counts_.find(g);
    if (it == counts_.end() || it->second < c) return false;
  }
  return true;
}

GSequence GSequence::minus(const GSequence& other) const {
  GSequence out = *this;
  for (const auto& [g, c] : other.counts_) {
    auto it = out.counts_.find(g);
    if (it == out.counts_.end() || it->second < c) throw DomainError("not a subsequence");
    it->second -= c;
    if (it->second == 0) out.counts_.erase(it);
  }
  return out;
}

bool operator<(const GSequence& a, const GSequence& b) {
  const auto la = a.length();
  const auto lb = b.length();
  if (la != lb) return la < lb;
  return a.terms() < b.terms();
}

GroupElement sigma(const FiniteAbelianGroup& group, const GSequence& x) {
  GroupElement total = group.zero();
  for (const auto& [g, c] : x.counts()) {
    group.validate(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      total[i] = (total[i] + g[i] * (c % group.orders()[i])) % group.orders()[i];
    }
  }
  return total;
}

bool is_block(const FiniteAbelianGroup& group, const std::vector<GroupElement>& subset,
              const GSequence& x) {
  for (const auto& g : x.support()) {
    if (std::find(subset.begin(), subset.end(), g) == subset.end()) return false;
  }
  return sigma(group, x) == group.zero();
}

namespace {

std::vector<GroupElement> normalized_subset(const FiniteAbelianGroup& group,
                                            std::vector<GroupElement> subset) {
  for (const auto& g : subset) group.validate(g);
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

/// Extends a zero-sum-free nondecreasing sequence T; `sums` flags the
/// nonempty subsums of T.
void extend_zero_sum_free(const FiniteAbelianGroup& group, const std::vector<GroupElement>& all,
                          const std::vector<GroupElement>& subset, std::size_t start, std::vector<std::size_t>& chosen,
                          const GroupElement& total, const std::vector<char>& sums,
                          std::vector<ZeroSumSequence>& atoms) {
  const GroupElement zero = group.zero();
  for (std::size_t i = start; i < subset.size(); ++i) {
    const GroupElement& g = subset[i];
    if (group.add(total, g) == zero) {
      GSequence atom;
      for (auto c : chosen) atom.add(subset[c]);
      atom.add(g);
      atoms.push_back(std::move(atom));
      continue;
    }
    // T*g stays zero-sum free iff g != 0 and -g is not a subsum of T.
    if (g == zero || sums[group.index_of(group.negate(g))]) continue;
    std::vector<char> next = sums;
    for (std::size_t k = 0; k < sums.size(); ++k) {
      if (sums[k]) next[group.index_of(group.add(all[k], g))] = 1;
    }
    next[group.index_of(g)] = 1;
    chosen.push_back(i);
    extend_zero_sum_free(group, all, subset, i, chosen, group.add(total, g), next, atoms);
    chosen.pop_back();
  }
}

void collect_factorizations(const std::vector<ZeroSumSequence>& atoms, std::size_t start,
                            const GSequence& rest, BlockFactorization& current,
                            std::vector<BlockFactorization>& out) {
  if (rest.empty()) {
    out.push_back(current);
    return;
  }
  // The least remaining term must be covered by the next atom chosen, or by
  // an atom of larger index; atoms are tried in order so each multiset
  // appears once.
  for (std::size_t i = start; i < atoms.size(); ++i) {
    if (!rest.contains(atoms[i])) continue;
    current.push_back(atoms[i]);
    collect_factorizations(atoms, i, rest.minus(atoms[i]), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ZeroSumSequence> block_atoms(const FiniteAbelianGroup& group,
                                         const std::vector<GroupElement>& subset) {
  const auto elems = normalized_subset(group, subset);
  if (elems.empty()) throw DomainError("G0 must be nonempty");
  std::vector<ZeroSumSequence> atoms;
  std::vector<std::size_t> chosen;
  extend_zero_sum_free(group, group.elements(), elems, 0, chosen, group.zero(),
                       std::vector<char>(group.order(), 0), atoms);
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::uint64_t davenport(const FiniteAbelianGroup& group) {
  std::uint64_t best = 0;
  for (const auto& a : block_atoms(group, group.elements())) best = std::max(best, a.length());
  return best;
}

std::vector<BlockFactorization> block_factorizations(const FiniteAbelianGroup& group,
                                                     const std::vector<GroupElement>& subset,
                                                     const GSequence& x) {
  const auto elems = normalized_subset(group, subset);
  if (!is_block(group, elems, x)) throw DomainError("the sequence is not a block over G0");
  if (x.empty()) return {BlockFactorization{}};
  std::vector<ZeroSumSequence> atoms;
  for (auto& a : block_atoms(group, x.support())) {
    if (x.contains(a)) atoms.push_back(std::move(a));
  }
  std::vector<BlockFactorization> out;
  BlockFactorization current;
  collect_factorizations(atoms, 0, x, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

LengthSet block_length_set(const FiniteAbelianGroup& group, const std::vector<GroupElement>& subset,
                           const GSequence& x) {
  LengthSet out;
  for (const auto& f : block_factorizations(group, subset, x)) {
    out.insert(Integer(static_cast<unsigned long>(f.size())));
  }
  return out;
}

Stabilization gcd_stabilization(const TermSource& next, std::size_t cap) {
  auto pull = [&]() {
    const auto t = next();
    if (!t) throw DomainError("sequence exhausted before a term was generated by its predecessors");
    if (*t == 0) throw DomainError("sequence terms must be positive");
    return *t;
  };
  Stabilization out;
  out.terms.push_back(pull());
  for (std::size_t m = 1;; ++m) {
    if (m > cap) {
      throw ScanCapError(cap, "no term among the first " + std::to_string(cap + 1) +
                                  " is generated by its predecessors");
    }
    const std::uint64_t a = pull();
    std::vector<Integer> weights;
    for (auto t : out.terms) weights.push_back(Integer(static_cast<unsigned long>(t)));
    const auto c = knapsack::Solver(weights).solve(Integer(static_cast<unsigned long>(a)));
    out.terms.push_back(a);
    if (c) {
      out.m = m;
      for (const auto& v : *c) out.coefficients.push_back(v.get_ui());
      return out;
    }
  }
}

TermSource from_list(std::vector<std::uint64_t> terms) {
  auto pos = std::make_shared<std::size_t>(0);
  auto data = std::make_shared<std::vector<std::uint64_t>>(std::move(terms));
  return [pos, data]() -> std::optional<std::uint64_t> {
    if (*pos >= data->size()) return std::nullopt;
    return (*data)[(*pos)++];
  };
}

}  // namespace puiseux
