#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond Rational, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "puiseux/rational.hpp"

namespace oracle {

using puiseux::Integer;
using puiseux::Rational;

/// Sieve membership for a set of positive integers up to `limit`.
inline std::vector<bool> sieve(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (std::uint64_t v = 1; v <= limit; ++v) {
    for (auto g : gens) {
      if (g <= v && in[v - g]) {
        in[v] = true;
        break;
      }
    }
  }
  return in;
}

/// Largest gap by scanning up to the classical bound (a-1)(b-1) for the two
/// smallest coprime-enough generators, here simply max^2.
inline std::int64_t frobenius(const std::vector<std::uint64_t>& gens) {
  const std::uint64_t top = *std::max_element(gens.begin(), gens.end());
  const std::uint64_t limit = top * top + top;
  const auto in = sieve(gens, limit);
  std::int64_t last = -1;
  for (std::uint64_t v = 0; v <= limit; ++v) {
    if (!in[v]) last = static_cast<std::int64_t>(v);
  }
  return last;
}

/// Minimal generators of <gens> by checking each against the others.
inline std::vector<std::uint64_t> minimal(std::vector<std::uint64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<std::uint64_t> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (!sieve(others, gens[i])[gens[i]]) out.push_back(gens[i]);
  }
  return out;
}

/// All coefficient vectors c with Σ c_i w_i = target, by nested loops with
/// c_i <= target / w_i.
inline std::vector<std::vector<std::uint64_t>> solutions(const std::vector<std::uint64_t>& w,
                                                         std::uint64_t target) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> c(w.size(), 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
    if (i == w.size()) {
      if (used == target) out.push_back(c);
      return;
    }
    for (std::uint64_t k = 0; used + k * w[i] <= target; ++k) {
      c[i] = k;
      rec(i + 1, used + k * w[i]);
    }
    c[i] = 0;
  };
  rec(0, 0);
  return out;
}

/// Factorizations of x over rational atoms as atom -> count maps.
inline std::set<std::map<Rational, std::uint64_t>> factorizations(const std::vector<Rational>& atoms,
                                                                  const Rational& x) {
  Integer l = x.den();
  for (const auto& a : atoms) l = puiseux::lcm(l, a.den());
  std::vector<std::uint64_t> w;
  for (const auto& a : atoms) w.push_back(Integer(a.num() * (l / a.den())).get_ui());
  const std::uint64_t target = Integer(x.num() * (l / x.den())).get_ui();
  std::set<std::map<Rational, std::uint64_t>> out;
  for (const auto& c : solutions(w, target)) {
    std::map<Rational, std::uint64_t> f;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) f[atoms[i]] = c[i];
    }
    out.insert(f);
  }
  return out;
}

/// Group elements as flat indices in a product of cyclic groups.
struct Group {
  std::vector<std::uint64_t> orders;
  std::uint64_t size() const {
    return std::accumulate(orders.begin(), orders.end(), std::uint64_t{1}, std::multiplies<>());
  }
  std::vector<std::uint64_t> decode(std::uint64_t idx) const {
    std::vector<std::uint64_t> e(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      e[i] = idx % orders[i];
      idx /= orders[i];
    }
    return e;
  }
  bool zero_sum(const std::vector<std::vector<std::uint64_t>>& terms) const {
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::uint64_t s = 0;
      for (const auto& t : terms) s += t[i];
      if (s % orders[i] != 0) return false;
    }
    return true;
  }
};

/// Minimal zero-sum sequences by enumerating nondecreasing tuples of length
/// <= max_len and checking every proper nonempty subsequence.
inline std::set<std::vector<std::vector<std::uint64_t>>> minimal_zero_sums(
    const Group& g, const std::vector<std::vector<std::uint64_t>>& subset, std::size_t max_len) {
  std::set<std::vector<std::vector<std::uint64_t>>> out;
  std::vector<std::vector<std::uint64_t>> elems = subset;
  std::sort(elems.begin(), elems.end());
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<std::vector<std::uint64_t>> terms;
      for (auto i : pick) terms.push_back(elems[i]);
      if (g.zero_sum(terms)) {
        bool minimal_seq = true;
        const std::size_t n = terms.size();
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n) && minimal_seq; ++mask) {
          std::vector<std::vector<std::uint64_t>> sub;
          for (std::size_t b = 0; b < n; ++b) {
            if (mask >> b & 1) sub.push_back(terms[b]);
          }
          if (g.zero_sum(sub)) minimal_seq = false;
        }
        if (minimal_seq) out.insert(terms);
      }
    }
    if (pick.size() == max_len) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Least m with a_{m+1} a nonnegative combination of a_1..a_m, by sieving
/// each prefix; 0 when none within the list.
inline std::size_t stabilization(const std::vector<std::uint64_t>& terms) {
  for (std::size_t m = 1; m < terms.size(); ++m) {
    std::vector<std::uint64_t> prefix(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(m));
    if (sieve(prefix, terms[m])[terms[m]]) return m;
  }
  return 0;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::uint64_t uniform(std::mt19937_64& r, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(r);
}

}  // namespace oracle
