#pragma once

#include <optional>
#include <vector>

#include "bicrit/integer.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

// Index sets are 1-based throughout, matching the gadget job names.
using IndexSet = std::vector<int>;

// Split a_1..a_n into m groups of equal sum t = sum(a) / m.
struct ThreePartitionSource {
  std::vector<Int> a;
  int m = 1;
  std::optional<std::vector<IndexSet>> solution;  // known for planted instances
};

// Find S with sum_{i in S} a_i = sum(a) / 2.
struct PartitionSource {
  std::vector<Int> a;
  std::optional<IndexSet> solution;
};

// Planted yes-instance: n values in [1, max_value] arranged into m groups of
// equal sum (group sizes differ by at most one), then shuffled. Requires
// n >= m >= 1; throws PreconditionError otherwise.
ThreePartitionSource planted_three_partition(int n, int m, std::int64_t max_value, Rng& rng);

// n uniform values in [1, max_value], with the last one raised until m | sum.
ThreePartitionSource random_three_partition(int n, int m, std::int64_t max_value, Rng& rng);

PartitionSource planted_partition(int n, std::int64_t max_value, Rng& rng);

// n uniform values in [1, max_value], with the last one raised to make the sum even.
PartitionSource random_partition(int n, std::int64_t max_value, Rng& rng);

// Exhaustive search; nullopt for no-instances (including m not dividing the sum).
std::optional<std::vector<IndexSet>> solve_three_partition(const std::vector<Int>& a, int m);

// Exhaustive subset search (n <= 30); the returned set is the first in
// increasing-mask order.
std::optional<IndexSet> solve_partition(const std::vector<Int>& a);

bool is_three_partition_solution(const std::vector<Int>& a, int m, const std::vector<IndexSet>& groups);
bool is_partition_solution(const std::vector<Int>& a, const IndexSet& s);

}  // namespace bicrit
