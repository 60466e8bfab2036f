#include <doctest.h>

#include "bicrit/exact.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/rng.hpp"
#include "oracles.hpp"

using namespace bicrit;

namespace {

Instance random_instance(Rng& rng, int n) {
  std::vector<std::pair<Int, Int>> jobs;
  for (int x = 0; x < n; ++x) jobs.emplace_back(rng.uniform(0, 20), rng.uniform(0, 20));
  return make_instance(jobs);
}

void check_reproduces(const Instance& inst, const OptResult& r) {
  REQUIRE(r.optimal());
  auto e = evaluate(inst, r.schedule);
  CHECK(e.tmax == r.tmax);
  CHECK(e.num_tardy == r.num_tardy);
}

}  // namespace

TEST_CASE("brute force on the three-job example") {
  auto inst = make_instance({{2, 2}, {3, 4}, {2, 5}});
  auto r = brute_force_permutations(inst, Variant::lex_u_then_tmax());
  // Only the order (0, 2, 1) keeps two jobs early; job 1 then finishes at 7.
  CHECK(r.num_tardy == 1);
  CHECK(r.tmax == 3);
  CHECK(r.explored == 6);
  auto one = brute_force_permutations(make_instance({{4, 1}}), Variant::lex_tmax_then_u());
  CHECK(one.schedule.order == std::vector<int>{0});
}

TEST_CASE("solvers match the independent permutation oracle") {
  Rng rng(21);
  for (int rep = 0; rep < 120; ++rep) {
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 7)));
    auto o = oracle::optima(oracle::plain(inst));

    auto tu = solve_lex_tmax_then_u(inst);
    check_reproduces(inst, tu);
    CHECK(tu.tmax == o.lex_tu.first);
    CHECK(tu.num_tardy == o.lex_tu.second);

    auto ut = solve_lex_u_then_tmax(inst);
    check_reproduces(inst, ut);
    CHECK(ut.num_tardy == o.lex_ut.first);
    CHECK(ut.tmax == o.lex_ut.second);

    for (long long ell : {0LL, 2LL, 5LL, 10LL, 30LL}) {
      auto c = solve_constraint(inst, ell);
      auto expect = o.constraint(ell);
      if (!expect) {
        CHECK(c.status == SolveStatus::Infeasible);
        continue;
      }
      check_reproduces(inst, c);
      CHECK(c.num_tardy == *expect);
      CHECK(c.tmax <= ell);
      for (long long k : {0LL, 1LL, 3LL}) {
        auto d = decision_constraint(inst, ell, k);
        CHECK(d.answer == (*expect <= k));
        if (d.answer) {
          auto e = evaluate(inst, d.witness);
          CHECK(e.tmax <= ell);
          CHECK(e.num_tardy <= k);
        }
      }
    }

    for (auto [w1, w2] : {std::pair{1, 1}, std::pair{1, 5}, std::pair{3, 1}, std::pair{1, 0}}) {
      auto w = solve_weighted_sum(inst, w1, w2);
      check_reproduces(inst, w);
      CHECK(w.objective.at(0) == o.weighted(w1, w2));
      CHECK(w.tmax * w1 + Int(w.num_tardy) * w2 == o.weighted(w1, w2));
    }
  }
}

TEST_CASE("weighted sum with w2 = 0 is pure Tmax") {
  auto inst = make_instance({{2, 2}, {3, 4}, {2, 5}});
  auto w = solve_weighted_sum(inst, 3, 0);
  CHECK(w.objective.at(0) == 3 * edd_schedule(inst).tmax);
  CHECK_THROWS_AS(solve_weighted_sum(inst, -1, 1), PreconditionError);
}

TEST_CASE("brute force agrees with the solvers through dispatch") {
  Rng rng(22);
  for (int rep = 0; rep < 40; ++rep) {
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 7)));
    for (auto v : {Variant::lex_tmax_then_u(), Variant::lex_u_then_tmax(), Variant::constraint_opt(4),
                   Variant::weighted_sum(2, 3)}) {
      auto a = solve(inst, v);
      auto b = brute_force_permutations(inst, v);
      CHECK(a.status == b.status);
      if (a.optimal()) CHECK(a.objective == b.objective);
    }
  }
}

TEST_CASE("budgets") {
  Rng rng(23);
  auto inst = random_instance(rng, 12);
  Budget tiny{100, 100};
  CHECK(solve_constraint(inst, 5, tiny).status == SolveStatus::BudgetExceeded);
  CHECK(brute_force_permutations(inst, Variant::lex_tmax_then_u(), tiny).status == SolveStatus::BudgetExceeded);
  CHECK(decision_constraint(inst, 5, 6, tiny).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("decision monotonicity") {
  Rng rng(24);
  for (int rep = 0; rep < 40; ++rep) {
    auto inst = random_instance(rng, static_cast<int>(rng.uniform(1, 7)));
    for (int ell = 0; ell < 12; ell += 3)
      for (int k = 0; k < 4; ++k)
        if (decision_constraint(inst, ell, k).answer) {
          CHECK(decision_constraint(inst, ell + 1, k).answer);
          CHECK(decision_constraint(inst, ell, k + 1).answer);
        }
    auto all = decision_constraint(inst, inst.total_proc(), static_cast<int>(inst.size()));
    CHECK(all.answer);
  }
}

TEST_CASE("constraint solver on the smallest strong gadget") {
  auto inst = gen_strong({1, 1, 1}, 1);
  REQUIRE(inst.size() == 21);
  const auto& meta = strong_meta(inst);
  auto r = solve_constraint(inst, meta.ell);
  REQUIRE(r.optimal());
  CHECK(r.num_tardy == 6);
  CHECK(r.tmax <= meta.ell);
  CHECK(decision_constraint(inst, meta.ell, meta.k).answer);
  CHECK_FALSE(decision_constraint(inst, meta.ell, meta.k - 1).answer);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(21, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}
