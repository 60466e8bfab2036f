#include <doctest.h>

#include <numeric>

#include "bicrit/source.hpp"
#include "oracles.hpp"

using namespace bicrit;

namespace {

std::vector<oracle::i64> plain(const std::vector<Int>& a) {
  std::vector<oracle::i64> v;
  for (auto x : a) v.push_back(x.to_int64());
  return v;
}

}  // namespace

TEST_CASE("planted 3-partition sources carry valid solutions") {
  Rng rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = static_cast<int>(rng.uniform(1, 4));
    const int n = m * static_cast<int>(rng.uniform(1, 3));
    auto src = planted_three_partition(n, m, 12, rng);
    REQUIRE(src.a.size() == static_cast<std::size_t>(n));
    REQUIRE(src.solution);
    CHECK(is_three_partition_solution(src.a, m, *src.solution));
    for (auto v : src.a) CHECK((v >= 1 && v <= 12));
    CHECK(oracle::equal_split_yes(plain(src.a), m));
  }
}

TEST_CASE("3-partition solver agrees with the oracle") {
  Rng rng(32);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = static_cast<int>(rng.uniform(1, 3));
    auto src = random_three_partition(static_cast<int>(rng.uniform(m, 7)), m, 9, rng);
    auto sol = solve_three_partition(src.a, m);
    CHECK(sol.has_value() == oracle::equal_split_yes(plain(src.a), m));
    if (sol) CHECK(is_three_partition_solution(src.a, m, *sol));
  }
  CHECK_FALSE(solve_three_partition({1, 1, 1, 7}, 2));
  CHECK(solve_three_partition({1, 1, 1}, 1));
}

TEST_CASE("partition generators and solver") {
  Rng rng(33);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = static_cast<int>(rng.uniform(2, 7));
    auto planted = planted_partition(n, 10, rng);
    REQUIRE(planted.solution);
    CHECK(is_partition_solution(planted.a, *planted.solution));

    auto rnd = random_partition(n, 10, rng);
    const Int total = std::accumulate(rnd.a.begin(), rnd.a.end(), Int(0));
    CHECK(total % 2 == 0);
    auto sol = solve_partition(rnd.a);
    CHECK(sol.has_value() == oracle::partition_yes(plain(rnd.a)));
    if (sol) CHECK(is_partition_solution(rnd.a, *sol));
  }
  CHECK_FALSE(solve_partition({1, 1, 1, 7}));
  CHECK(*solve_partition({1, 1, 2}) == IndexSet{1, 2});
}

TEST_CASE("solution checkers reject malformed sets") {
  CHECK_FALSE(is_partition_solution({1, 1, 2}, {1, 1}));
  CHECK_FALSE(is_partition_solution({1, 1, 2}, {4}));
  CHECK_FALSE(is_three_partition_solution({1, 1, 2, 2}, 2, {{1, 4}}));
  CHECK_FALSE(is_three_partition_solution({1, 1, 2, 2}, 2, {{1, 4}, {2, 4}}));
  CHECK(is_three_partition_solution({1, 1, 2, 2}, 2, {{1, 4}, {2, 3}}));
}

TEST_CASE("same seed, same source") {
  Rng r1(99), r2(99);
  auto a = planted_three_partition(9, 3, 12, r1);
  auto b = planted_three_partition(9, 3, 12, r2);
  CHECK(a.a == b.a);
  CHECK(*a.solution == *b.solution);
}
