#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bicrit/classic.hpp"
#include "bicrit/rng.hpp"
#include "oracles.hpp"

using namespace bicrit;

namespace {

Instance random_instance(Rng& rng, int n, int pmax = 20, int dmax = 20) {
  std::vector<std::pair<Int, Int>> jobs;
  for (int x = 0; x < n; ++x) jobs.emplace_back(rng.uniform(0, pmax), rng.uniform(0, dmax));
  return make_instance(jobs);
}

std::vector<int> ids_of(const std::vector<char>& mask) {
  std::vector<int> ids;
  for (std::size_t x = 0; x < mask.size(); ++x)
    if (mask[x]) ids.push_back(static_cast<int>(x));
  return ids;
}

// Least Tmax over orders keeping the masked jobs early; -1 if none.
long long min_tmax_keeping(const std::vector<oracle::PJob>& jobs, const std::vector<char>& early) {
  std::vector<int> perm(jobs.size());
  std::iota(perm.begin(), perm.end(), 0);
  long long best = -1;
  do {
    long long t = 0, tmax = 0;
    bool ok = true;
    for (int x : perm) {
      t += jobs[x].p;
      const long long late = t - jobs[x].d;
      if (early[x] && late > 0) ok = false;
      tmax = std::max(tmax, late);
    }
    if (ok && (best < 0 || tmax < best)) best = tmax;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("EDD examples") {
  auto solo = make_instance({{5, 1}});
  CHECK(edd_schedule(solo).tmax == 4);
  auto two = make_instance({{2, 6}, {3, 3}});
  auto r = edd_schedule(two);
  CHECK(r.schedule.order == std::vector<int>{1, 0});
  CHECK(r.tmax == 0);
}

TEST_CASE("Moore-Hodgson examples") {
  auto loose = make_instance({{1, 10}, {2, 10}, {3, 10}});
  CHECK(moore_hodgson(loose).min_tardy == 0);
  auto three = make_instance({{2, 2}, {3, 4}, {2, 5}});
  auto r = moore_hodgson(three);
  CHECK(r.min_tardy == 1);
  CHECK(r.rejected == std::vector<int>{1});
  CHECK(evaluate(three, r.schedule).num_tardy == 1);
}

TEST_CASE("EDD and Moore-Hodgson match the permutation oracle") {
  Rng rng(11);
  for (int rep = 0; rep < 150; ++rep) {
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 7)));
    auto o = oracle::optima(oracle::plain(inst));
    auto edd = edd_schedule(inst);
    CHECK(edd.tmax == o.min_tmax);
    CHECK(evaluate(inst, edd.schedule).tmax == edd.tmax);
    auto mh = moore_hodgson(inst);
    CHECK(mh.min_tardy == o.min_u);
    CHECK(evaluate(inst, mh.schedule).num_tardy == mh.min_tardy);
    CHECK(static_cast<int>(inst.size()) - mh.min_tardy == oracle::max_early_dp(oracle::plain(inst)));
  }
}

TEST_CASE("canonical schedule with every job early is EDD") {
  Rng rng(12);
  for (int rep = 0; rep < 50; ++rep) {
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 8)));
    std::vector<int> all(inst.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(canonical_schedule(inst, all, rng.uniform(0, 10), TieBreakRule::by_id()) == edd_schedule(inst).schedule);
  }
}

TEST_CASE("canonical schedule with ell beyond the total processing time is EDD-for-set") {
  Rng rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    // Chosen jobs must come first, so all due dates stay below sum p + 1.
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 8)), 20, 5);
    std::vector<char> mask(inst.size());
    for (auto& c : mask) c = rng.coin();
    const auto chosen = ids_of(mask);
    auto canon = canonical_schedule(inst, chosen, inst.total_proc() + 10, TieBreakRule::by_id());
    auto efs = edd_for_set(inst, chosen);
    // Chosen prefix is identical; the unchosen suffix is in due order instead of id order.
    const auto head = static_cast<long>(chosen.size());
    CHECK(std::equal(efs.schedule.order.begin(), efs.schedule.order.begin() + head, canon.order.begin()));
  }
}

TEST_CASE("canonical feasibility matches brute-force existence") {
  Rng rng(14);
  for (int rep = 0; rep < 60; ++rep) {
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 6)));
    const auto jobs = oracle::plain(inst);
    CanonicalProbe probe(inst, TieBreakRule::by_id());
    for (int s = 0; s < 4; ++s) {
      std::vector<char> mask(inst.size());
      for (auto& c : mask) c = rng.coin();
      for (long long ell : {0LL, 1LL, 3LL, 7LL, 15LL, 40LL}) {
        const bool expect = oracle::exists_with_early(jobs, mask, ell);
        CHECK(probe.feasible(mask, ell) == expect);
        auto sched = canonical_schedule(inst, ids_of(mask), ell, TieBreakRule::by_id());
        auto e = evaluate(inst, sched);
        bool ok = e.tmax <= ell;
        for (std::size_t x = 0; x < mask.size(); ++x)
          if (mask[x] && e.is_tardy(x)) ok = false;
        CHECK(ok == expect);
      }
    }
  }
}

TEST_CASE("min_tmax_given_early") {
  auto inst = make_instance({{2, 2}, {3, 4}, {2, 5}});
  CHECK(*min_tmax_given_early(inst, std::vector<int>{}).ell == edd_schedule(inst).tmax);

  auto blocked = make_instance({{5, 1}, {5, 1}});
  CHECK_FALSE(min_tmax_given_early(blocked, std::vector<int>{0, 1}).feasible());

  Rng rng(15);
  for (int rep = 0; rep < 80; ++rep) {
    auto r = random_instance(rng, static_cast<int>(rng.uniform(1, 6)));
    std::vector<char> mask(r.size());
    for (auto& c : mask) c = rng.coin();
    const long long expect = min_tmax_keeping(oracle::plain(r), mask);
    auto got = min_tmax_given_early(r, ids_of(mask));
    if (expect < 0) {
      CHECK_FALSE(got.feasible());
    } else {
      REQUIRE(got.feasible());
      CHECK(*got.ell == expect);
      CHECK(evaluate(r, got.schedule).tmax <= *got.ell);
    }
    // Monotone in the early set.
    auto sub = mask;
    for (auto& c : sub) c = c && rng.coin();
    auto smaller = min_tmax_given_early(r, ids_of(sub));
    if (got.feasible()) {
      REQUIRE(smaller.feasible());
      CHECK(*smaller.ell <= *got.ell);
    }
  }
}

TEST_CASE("edd_for_set") {
  auto inst = make_instance({{2, 2}, {3, 4}, {2, 5}});
  auto none = edd_for_set(inst, std::vector<int>{});
  CHECK(none.all_chosen_early);
  CHECK(none.schedule.order == std::vector<int>{0, 1, 2});
  auto all = edd_for_set(inst, std::vector<int>{2, 1, 0});
  CHECK(all.schedule == edd_schedule(inst).schedule);
  CHECK_FALSE(all.all_chosen_early);  // min sum U is 1
  auto two = edd_for_set(inst, std::vector<int>{0, 2});
  CHECK(two.all_chosen_early);
  CHECK(two.schedule.order == std::vector<int>{0, 2, 1});
  CHECK_THROWS_AS(edd_for_set(inst, std::vector<int>{9}), PreconditionError);
}

TEST_CASE("tie-break rule ranks") {
  TieBreakRule rule;
  CHECK(rule.rank(TagKind::NumberStar) < rule.rank(TagKind::FillerFirst));
  CHECK(rule.rank(TagKind::WeakMain) < rule.rank(TagKind::WeakStar));
  CHECK(rule.rank(TagKind::WeakStar) < rule.rank(TagKind::WeakFiller));
  auto flat = TieBreakRule::by_id();
  CHECK(flat.rank(TagKind::NumberStar) == flat.rank(TagKind::Plain));
}
