#include <algorithm>
#include <map>
#include <set>

#include "folmod/solvers.hpp"

namespace folmod {

namespace {

// Saturating d! * (k+1)^d; anything past ~1e18 exceeds any desk-scale family.
std::uint64_t size_class_bound(int d, int k) {
  const std::uint64_t cap = ~0ull / 4;
  std::uint64_t value = 1;
  auto mul = [&](std::uint64_t factor) {
    if (value > cap / std::max<std::uint64_t>(factor, 1)) value = cap;
    else value *= factor;
  };
  for (int i = 2; i <= d; ++i) mul(static_cast<std::uint64_t>(i));
  for (int i = 0; i < d; ++i) mul(static_cast<std::uint64_t>(k) + 1);
  return value;
}

struct Sunflower {
  std::vector<int> core;             // sorted, may be empty
  std::vector<std::size_t> members;  // indices into the family
};

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return false;
  return true;
}

// Classical constructive argument: a maximal disjoint subfamily either is
// the sunflower or pins down a frequent element to recurse on. Succeeds
// whenever the family of equal-size sets is larger than d!*(petals-1)^d.
std::optional<Sunflower> find_sunflower(const std::vector<std::vector<int>>& sets,
                                        const std::vector<std::size_t>& ids, int petals) {
  if (sets.empty()) return std::nullopt;
  std::vector<std::size_t> packed;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool ok = true;
    for (std::size_t j : packed)
      if (!disjoint(sets[i], sets[j])) {
        ok = false;
        break;
      }
    if (ok) packed.push_back(i);
  }
  if (static_cast<int>(packed.size()) >= petals) {
    Sunflower out;
    for (int i = 0; i < petals; ++i) out.members.push_back(ids[packed[i]]);
    return out;
  }
  std::map<int, std::size_t> frequency;
  for (std::size_t i : packed)
    for (int x : sets[i]) frequency[x];  // seed with union elements only
  for (const auto& s : sets)
    for (int x : s) {
      auto it = frequency.find(x);
      if (it != frequency.end()) ++it->second;
    }
  int best = -1;
  std::size_t best_count = 0;
  for (const auto& [x, count] : frequency)
    if (count > best_count) {
      best = x;
      best_count = count;
    }
  if (best < 0) return std::nullopt;
  std::vector<std::vector<int>> reduced;
  std::vector<std::size_t> reduced_ids;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!std::binary_search(sets[i].begin(), sets[i].end(), best)) continue;
    std::vector<int> rest;
    for (int x : sets[i])
      if (x != best) rest.push_back(x);
    reduced.push_back(std::move(rest));
    reduced_ids.push_back(ids[i]);
  }
  auto inner = find_sunflower(reduced, reduced_ids, petals);
  if (!inner) return std::nullopt;
  inner->core.insert(std::lower_bound(inner->core.begin(), inner->core.end(), best), best);
  return inner;
}

}  // namespace

KernelizeResult kernelize_hitting_family(const HittingFamily& fam, int k) {
  if (k < 0) throw std::invalid_argument("kernelize_hitting_family: negative budget");
  std::set<std::vector<int>> pool;
  for (auto s : fam.sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) return {true, {}};  // an empty member is unhittable
    pool.insert(std::move(s));
  }
  const int petals = k + 2;

  for (;;) {
    // Bucket the family by exact set size and reduce the first oversized one.
    std::map<int, std::vector<std::vector<int>>> buckets;
    for (const auto& s : pool) buckets[static_cast<int>(s.size())].push_back(s);
    bool reduced = false;
    for (auto& [d, bucket] : buckets) {
      if (static_cast<std::uint64_t>(bucket.size()) <= size_class_bound(d, k)) continue;
      std::vector<std::size_t> ids(bucket.size());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
      auto sf = find_sunflower(bucket, ids, petals);
      if (!sf)
        throw std::logic_error("kernelize_hitting_family: oversized class without a sunflower");
      if (sf->core.empty()) return {true, {}};  // k+2 pairwise disjoint sets
      for (std::size_t i : sf->members) pool.erase(bucket[i]);
      pool.insert(sf->core);
      reduced = true;
      break;
    }
    if (!reduced) break;
  }

  KernelizeResult out;
  out.family.sets.assign(pool.begin(), pool.end());
  std::set<int> universe;
  for (const auto& s : out.family.sets) universe.insert(s.begin(), s.end());
  out.family.universe.assign(universe.begin(), universe.end());
  return out;
}

}  // namespace folmod
