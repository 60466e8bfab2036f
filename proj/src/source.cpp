#include "bicrit/source.hpp"

#include <algorithm>
#include <numeric>

#include "bicrit/model.hpp"

namespace bicrit {

namespace {

Int sum_of(const std::vector<Int>& a) {
  Int s;
  for (const Int& x : a) s += x;
  return s;
}

// Random composition of `total` into `parts` values in [1, max_value]; the
// caller guarantees parts <= total <= parts * max_value.
std::vector<std::int64_t> composition(std::int64_t total, int parts, std::int64_t max_value, Rng& rng) {
  std::vector<std::int64_t> out;
  std::int64_t rest = total;
  for (int q = 0; q < parts; ++q) {
    const std::int64_t after = parts - q - 1;
    const std::int64_t lo = std::max<std::int64_t>(1, rest - after * max_value);
    const std::int64_t hi = std::min<std::int64_t>(max_value, rest - after);
    const std::int64_t v = rng.uniform(lo, hi);
    out.push_back(v);
    rest -= v;
  }
  return out;
}

// Deals `n` values into `groups` planted groups of equal sum, shuffles, and
// returns the values with the 1-based member lists of each group.
std::pair<std::vector<Int>, std::vector<IndexSet>> plant(int n, int groups, std::int64_t max_value, Rng& rng) {
  if (groups < 1 || n < groups) throw PreconditionError("need n >= number of groups >= 1");
  if (max_value < 1) throw PreconditionError("max_value must be at least 1");
  const int small = n / groups;
  const int large = small + (n % groups ? 1 : 0);
  const std::int64_t t_lo = large;
  const std::int64_t t_hi = static_cast<std::int64_t>(small) * max_value;
  if (t_lo > t_hi) throw PreconditionError("group sizes differ and max_value is too small to balance them");
  const std::int64_t t = rng.uniform(t_lo, t_hi);

  std::vector<std::pair<std::int64_t, int>> tagged;  // (value, group)
  for (int g = 0; g < groups; ++g) {
    const int size = small + (g < n % groups ? 1 : 0);
    for (std::int64_t v : composition(t, size, max_value, rng)) tagged.emplace_back(v, g);
  }
  rng.shuffle(tagged);

  std::vector<Int> a;
  std::vector<IndexSet> solution(groups);
  for (std::size_t k = 0; k < tagged.size(); ++k) {
    a.emplace_back(tagged[k].first);
    solution[tagged[k].second].push_back(static_cast<int>(k) + 1);
  }
  return {std::move(a), std::move(solution)};
}

std::vector<Int> random_values(int n, std::int64_t max_value, Rng& rng) {
  if (n < 1 || max_value < 1) throw PreconditionError("need n >= 1 and max_value >= 1");
  std::vector<Int> a;
  for (int k = 0; k < n; ++k) a.emplace_back(rng.uniform(1, max_value));
  return a;
}

bool assign(const std::vector<std::pair<Int, int>>& items, std::size_t pos, std::vector<Int>& load, const Int& t,
            std::vector<IndexSet>& groups) {
  if (pos == items.size()) return std::all_of(load.begin(), load.end(), [&](const Int& x) { return x == t; });
  const auto& [value, index] = items[pos];
  for (std::size_t g = 0; g < load.size(); ++g) {
    if (load[g] + value > t) continue;
    // Groups with equal load are interchangeable; only try the first of them.
    bool seen = false;
    for (std::size_t h = 0; h < g && !seen; ++h) seen = load[h] == load[g];
    if (seen) continue;
    load[g] += value;
    groups[g].push_back(index);
    if (assign(items, pos + 1, load, t, groups)) return true;
    groups[g].pop_back();
    load[g] -= value;
  }
  return false;
}

}  // namespace

ThreePartitionSource planted_three_partition(int n, int m, std::int64_t max_value, Rng& rng) {
  auto [a, solution] = plant(n, m, max_value, rng);
  return {std::move(a), m, std::move(solution)};
}

ThreePartitionSource random_three_partition(int n, int m, std::int64_t max_value, Rng& rng) {
  if (m < 1) throw PreconditionError("m must be positive");
  auto a = random_values(n, max_value, rng);
  Int rem = sum_of(a) % Int(m);
  if (rem != 0) a.back() += Int(m) - rem;
  return {std::move(a), m, std::nullopt};
}

PartitionSource planted_partition(int n, std::int64_t max_value, Rng& rng) {
  auto [a, groups] = plant(n, 2, max_value, rng);
  std::sort(groups[0].begin(), groups[0].end());
  return {std::move(a), std::move(groups[0])};
}

PartitionSource random_partition(int n, std::int64_t max_value, Rng& rng) {
  auto a = random_values(n, max_value, rng);
  if (sum_of(a) % 2 != 0) a.back() += 1;
  return {std::move(a), std::nullopt};
}

std::optional<std::vector<IndexSet>> solve_three_partition(const std::vector<Int>& a, int m) {
  if (m < 1 || a.empty()) return std::nullopt;
  const Int total = sum_of(a);
  if (total % Int(m) != 0) return std::nullopt;
  const Int t = total / Int(m);
  std::vector<std::pair<Int, int>> items;
  for (std::size_t k = 0; k < a.size(); ++k) items.emplace_back(a[k], static_cast<int>(k) + 1);
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Int> load(m);
  std::vector<IndexSet> groups(m);
  if (!assign(items, 0, load, t, groups)) return std::nullopt;
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

std::optional<IndexSet> solve_partition(const std::vector<Int>& a) {
  const std::size_t n = a.size();
  if (n == 0 || n > 30) throw PreconditionError("solve_partition handles 1..30 values");
  const Int total = sum_of(a);
  if (total % 2 != 0) return std::nullopt;
  const Int t = total / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Int s;
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1U) s += a[k];
    if (s != t) continue;
    IndexSet out;
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1U) out.push_back(static_cast<int>(k) + 1);
    return out;
  }
  return std::nullopt;
}

bool is_three_partition_solution(const std::vector<Int>& a, int m, const std::vector<IndexSet>& groups) {
  if (m < 1 || static_cast<int>(groups.size()) != m) return false;
  const Int total = sum_of(a);
  if (total % Int(m) != 0) return false;
  const Int t = total / Int(m);
  std::vector<char> used(a.size(), 0);
  for (const IndexSet& g : groups) {
    Int s;
    for (int i : g) {
      if (i < 1 || i > static_cast<int>(a.size()) || used[i - 1]) return false;
      used[i - 1] = 1;
      s += a[i - 1];
    }
    if (s != t) return false;
  }
  return std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
}

bool is_partition_solution(const std::vector<Int>& a, const IndexSet& s) {
  const Int total = sum_of(a);
  if (total % 2 != 0) return false;
  std::vector<char> used(a.size(), 0);
  Int sum;
  for (int i : s) {
    if (i < 1 || i > static_cast<int>(a.size()) || used[i - 1]) return false;
    used[i - 1] = 1;
    sum += a[i - 1];
  }
  return sum * 2 == total;
}

}  // namespace bicrit
