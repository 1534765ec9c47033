#include "puiseux/knapsack.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>

#include "puiseux/errors.hpp"

namespace puiseux::knapsack {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kAperyModulusLimit = 1u << 21;
constexpr std::uint64_t kDpTargetLimit = 1u << 22;
constexpr std::uint64_t kSmallWeightLimit = std::uint64_t{1} << 62;

std::optional<std::uint64_t> to_u64(const Integer& n) {
  if (sgn(n) < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 63) return std::nullopt;
  std::uint64_t v = 0;
  std::size_t count = 0;
  mpz_export(&v, &count, -1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

Integer from_u128(u128 v) {
  Integer hi;
  Integer lo;
  const auto h = static_cast<std::uint64_t>(v >> 64);
  const auto l = static_cast<std::uint64_t>(v);
  mpz_import(hi.get_mpz_t(), 1, 1, sizeof(h), 0, 0, &h);
  mpz_import(lo.get_mpz_t(), 1, 1, sizeof(l), 0, 0, &l);
  Integer out = hi;
  out <<= 64;
  return out + lo;
}

Integer from_u64(std::uint64_t v) { return from_u128(v); }

}  // namespace

AperyTable round_robin(std::span<const std::uint64_t> weights, std::uint64_t modulus) {
  if (modulus == 0) throw DomainError("Apery modulus must be positive");
  AperyTable t;
  t.modulus = modulus;
  t.least.assign(modulus, AperyTable::kUnreachable);
  t.last.assign(modulus, -1);
  t.least[0] = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::uint64_t a = weights[i];
    if (a == 0) throw DomainError("knapsack weights must be positive");
    const std::uint64_t step = a % modulus;
    if (step == 0) continue;
    const std::uint64_t d = std::gcd(step, modulus);
    const std::uint64_t cycle = modulus / d;
    for (std::uint64_t r = 0; r < d; ++r) {
      // Start the walk at the minimum of this residue cycle.
      std::uint64_t start = r;
      u128 best = t.least[r];
      for (std::uint64_t q = r; q < modulus; q += d) {
        if (t.least[q] < best) {
          best = t.least[q];
          start = q;
        }
      }
      if (best == AperyTable::kUnreachable) continue;
      u128 current = best;
      std::uint64_t pos = start;
      for (std::uint64_t k = 0; k < cycle; ++k) {
        current += a;
        pos = static_cast<std::uint64_t>((pos + step) % modulus);
        if (current < t.least[pos]) {
          t.least[pos] = current;
          t.last[pos] = static_cast<std::int32_t>(i);
        } else {
          current = t.least[pos];
        }
      }
    }
  }
  return t;
}

struct Solver::Shared {
  std::once_flag once;
  std::optional<AperyTable> apery;  // modulus = smallest reduced weight
  std::size_t modulus_index = 0;
};

Solver::Solver(std::vector<Integer> weights)
    : weights_(std::move(weights)), shared_(std::make_shared<Shared>()) {
  if (weights_.empty()) throw DomainError("knapsack needs at least one weight");
  gcd_ = 0;
  for (const auto& w : weights_) {
    if (sgn(w) <= 0) throw DomainError("knapsack weights must be positive");
    gcd_ = gcd(gcd_, w);
  }
  order_.resize(weights_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return weights_[a] > weights_[b]; });
  suffix_gcd_.assign(weights_.size() + 1, Integer(0));
  for (std::size_t i = weights_.size(); i-- > 0;) {
    suffix_gcd_[i] = gcd(suffix_gcd_[i + 1], weights_[order_[i]]);
  }
  small_ = true;
  for (const auto& w : weights_) {
    auto v = to_u64(w / gcd_);
    if (!v || *v >= kSmallWeightLimit) {
      small_ = false;
      break;
    }
    reduced_.push_back(*v);
  }
  if (!small_) reduced_.clear();
}

std::optional<Coefficients> Solver::solve(const Integer& target) const {
  if (sgn(target) < 0) return std::nullopt;
  if (sgn(target) == 0) return Coefficients(weights_.size(), Integer(0));
  if (target % gcd_ != 0) return std::nullopt;
  if (small_) {
    const std::uint64_t min_w = *std::min_element(reduced_.begin(), reduced_.end());
    const auto t = to_u64(target / gcd_);
    if (min_w <= kAperyModulusLimit && t) return solve_apery(*t);
    if (t && *t <= kDpTargetLimit) return solve_dp(*t);
  }
  return solve_dfs(target);
}

std::optional<Coefficients> Solver::solve_apery(std::uint64_t target) const {
  std::call_once(shared_->once, [this] {
    const auto it = std::min_element(reduced_.begin(), reduced_.end());
    shared_->modulus_index = static_cast<std::size_t>(it - reduced_.begin());
    shared_->apery = round_robin(reduced_, *it);
  });
  const AperyTable& t = *shared_->apery;
  const std::uint64_t m = t.modulus;
  if (!t.reachable(target % m) || t.least[target % m] > target) return std::nullopt;

  Coefficients c(weights_.size(), Integer(0));
  u128 value = target;
  while (value != 0) {
    const std::uint64_t r = static_cast<std::uint64_t>(value % m);
    const u128 base = t.least[r];
    c[shared_->modulus_index] += from_u128((value - base) / m);
    if (base == 0) break;
    const auto i = static_cast<std::size_t>(t.last[r]);
    c[i] += 1;
    value = base - reduced_[i];
  }
  return c;
}

std::optional<Coefficients> Solver::solve_dp(std::uint64_t target) const {
  std::vector<std::int32_t> via(target + 1, -1);
  std::vector<bool> seen(target + 1, false);
  seen[0] = true;
  for (std::uint64_t v = 1; v <= target; ++v) {
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      if (reduced_[i] <= v && seen[v - reduced_[i]]) {
        seen[v] = true;
        via[v] = static_cast<std::int32_t>(i);
        break;
      }
    }
  }
  if (!seen[target]) return std::nullopt;
  Coefficients c(weights_.size(), Integer(0));
  for (std::uint64_t v = target; v != 0; v -= reduced_[static_cast<std::size_t>(via[v])]) {
    c[static_cast<std::size_t>(via[v])] += 1;
  }
  return c;
}

std::optional<Coefficients> Solver::solve_dfs(const Integer& target) const {
  std::optional<Coefficients> found;
  for_each_solution(target, [&](const Coefficients& c) {
    found = c;
    return false;
  });
  return found;
}

void Solver::for_each_solution(const Integer& target,
                               const std::function<bool(const Coefficients&)>& visit) const {
  if (sgn(target) < 0) return;
  if (target % gcd_ != 0) return;
  const std::size_t k = weights_.size();
  Coefficients c(k, Integer(0));
  bool stop = false;

  std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t level,
                                                             const Integer& remaining) {
    if (stop) return;
    const std::size_t idx = order_[level];
    const Integer& w = weights_[idx];
    if (level + 1 == k) {
      if (remaining % w == 0) {
        c[idx] = remaining / w;
        if (!visit(c)) stop = true;
        c[idx] = 0;
      }
      return;
    }
    const Integer& g = suffix_gcd_[level + 1];
    Integer count = remaining / w;
    Integer rest = remaining - count * w;
    while (true) {
      if (rest % g == 0) {
        c[idx] = count;
        rec(level + 1, rest);
        if (stop) break;
      }
      if (count == 0) break;
      --count;
      rest += w;
    }
    c[idx] = 0;
  };
  rec(0, target);
}

std::vector<bool> Solver::reachable_up_to(std::uint64_t limit) const {
  if (limit > (std::uint64_t{1} << 32)) throw DomainError("lattice sweep limit too large");
  std::vector<bool> reach(limit + 1, false);
  reach[0] = true;
  std::vector<std::uint64_t> ws;
  for (const auto& w : weights_) {
    auto v = to_u64(w);
    if (v && *v <= limit) ws.push_back(*v);
  }
  for (std::uint64_t v = 1; v <= limit; ++v) {
    for (auto w : ws) {
      if (w <= v && reach[v - w]) {
        reach[v] = true;
        break;
      }
    }
  }
  return reach;
}

bool in_monoid(std::span<const std::uint64_t> gens, std::uint64_t x) {
  if (x == 0) return true;
  if (gens.empty()) return false;
  std::vector<Integer> ws;
  ws.reserve(gens.size());
  for (auto g : gens) ws.push_back(from_u64(g));
  return Solver(std::move(ws)).feasible(from_u64(x));
}

}  // namespace puiseux::knapsack
