#include "puiseux/numerical.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "puiseux/errors.hpp"
#include "puiseux/knapsack.hpp"

namespace puiseux {

struct NumericalMonoid::Cache {
  std::once_flag frobenius_once;
  std::int64_t frobenius = -1;

  std::shared_mutex mutex;
  std::vector<bool> member;  // member[v] for v < member.size()
};

namespace {

std::vector<std::uint64_t> minimalize(std::vector<std::uint64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> kept;
  for (auto g : gens) {
    // Only smaller generators can contribute to g.
    if (!knapsack::in_monoid(kept, g)) kept.push_back(g);
  }
  return kept;
}

}  // namespace

std::pair<NumericalMonoid, std::uint64_t> NumericalMonoid::from_generators(
    std::span<const std::uint64_t> gens) {
  if (gens.empty()) throw DomainError("numerical monoid needs at least one generator");
  std::uint64_t d = 0;
  for (auto g : gens) {
    if (g == 0) throw DomainError("numerical monoid generators must be positive");
    d = std::gcd(d, g);
  }
  std::vector<std::uint64_t> scaled;
  scaled.reserve(gens.size());
  for (auto g : gens) scaled.push_back(g / d);
  return {NumericalMonoid(MinimalTag{}, minimalize(std::move(scaled))), d};
}

NumericalMonoid::NumericalMonoid(std::span<const std::uint64_t> gens) {
  auto [monoid, scale] = from_generators(gens);
  if (scale != 1) {
    throw DomainError("generators of a numerical monoid must have gcd 1 (gcd is " +
                      std::to_string(scale) + ")");
  }
  *this = std::move(monoid);
}

NumericalMonoid::NumericalMonoid(std::initializer_list<std::uint64_t> gens)
    : NumericalMonoid(std::span<const std::uint64_t>(gens.begin(), gens.size())) {}

NumericalMonoid::NumericalMonoid(MinimalTag, std::vector<std::uint64_t> minimal)
    : gens_(std::move(minimal)), cache_(std::make_shared<Cache>()) {}

NumericalMonoid NumericalMonoid::naturals() { return NumericalMonoid(MinimalTag{}, {1}); }

std::int64_t NumericalMonoid::frobenius() const {
  std::call_once(cache_->frobenius_once, [this] {
    const auto table = knapsack::round_robin(gens_, gens_.front());
    const auto top = *std::max_element(table.least.begin(), table.least.end());
    cache_->frobenius = static_cast<std::int64_t>(top) - static_cast<std::int64_t>(gens_.front());
  });
  return cache_->frobenius;
}

bool NumericalMonoid::contains(std::uint64_t x) const {
  const std::int64_t f = frobenius();
  if (static_cast<std::int64_t>(x) > f) return true;
  {
    std::shared_lock lock(cache_->mutex);
    if (x < cache_->member.size()) return cache_->member[x];
  }
  std::unique_lock lock(cache_->mutex);
  auto& member = cache_->member;
  if (x >= member.size()) {
    const std::uint64_t target =
        std::min<std::uint64_t>(std::max<std::uint64_t>(x + 1, 2 * member.size()),
                                static_cast<std::uint64_t>(f) + 1);
    std::uint64_t v = member.size();
    member.resize(target, false);
    if (v == 0) member[v++] = true;
    for (; v < target; ++v) {
      for (auto g : gens_) {
        if (g > v) break;
        if (member[v - g]) {
          member[v] = true;
          break;
        }
      }
    }
  }
  return member[x];
}

std::vector<std::uint64_t> NumericalMonoid::apery_set(std::uint64_t m) const {
  if (m == 0 || !contains(m)) {
    throw DomainError("Apery modulus " + std::to_string(m) + " is not a positive element");
  }
  const auto table = knapsack::round_robin(gens_, m);
  std::vector<std::uint64_t> out;
  out.reserve(m);
  for (auto v : table.least) out.push_back(static_cast<std::uint64_t>(v));
  return out;
}

}  // namespace puiseux
