#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bicrit/classic.hpp"
#include "bicrit/model.hpp"

namespace bicrit {

struct Budget {
  std::uint64_t max_subsets = std::uint64_t{1} << 22;
  std::uint64_t max_perms = 362880;  // 9!
};

enum class SolveStatus { Optimal, Infeasible, BudgetExceeded };

std::string_view to_string(SolveStatus status);

// `objective` is the optimized value as a lexicographic tuple:
//   constraint      {num_tardy}
//   lex Tmax, U     {tmax, num_tardy}
//   lex U, Tmax     {num_tardy, tmax}
//   weighted sum    {w1 * tmax + w2 * num_tardy}
// `explored` counts enumerated early sets (or permutations for the brute force).
struct OptResult {
  Schedule schedule;
  Int tmax;
  int num_tardy = 0;
  std::vector<Int> objective;
  std::uint64_t explored = 0;
  SolveStatus status = SolveStatus::Infeasible;

  bool optimal() const { return status == SolveStatus::Optimal; }
};

// min sum U subject to Tmax <= ell. Early sets are enumerated by decreasing
// size and each is tested with its canonical schedule; the first feasible size
// is optimal.
OptResult solve_constraint(const Instance& instance, Int ell, const Budget& budget = {});

// Minimizes sum U among the schedules with minimum Tmax.
OptResult solve_lex_tmax_then_u(const Instance& instance, const Budget& budget = {});

// Minimizes Tmax among the schedules with minimum sum U. Only early sets of
// the Moore-Hodgson size are visited; the budget applies to their count.
OptResult solve_lex_u_then_tmax(const Instance& instance, const Budget& budget = {});

// Minimizes w1 * Tmax + w2 * sum U. Weights must be nonnegative.
//
// Every early set E is scored by the realized (Tmax, sum U) of the schedule
// that minimizes Tmax with E early. Incidental extra early jobs only lower the
// score, and the exact early set of an optimal schedule is among those
// enumerated, so the minimum is exact.
OptResult solve_weighted_sum(const Instance& instance, Int w1, Int w2, const Budget& budget = {});

// Dispatches on variant.kind (ConstraintDecision is solved as ConstraintOpt).
OptResult solve(const Instance& instance, const Variant& variant, const Budget& budget = {});

// Enumerates all n! orders. Reference oracle for the solvers above.
OptResult brute_force_permutations(const Instance& instance, const Variant& objective,
                                   const Budget& budget = {});

struct DecisionResult {
  bool answer = false;
  SolveStatus status = SolveStatus::Optimal;  // BudgetExceeded leaves `answer` false
  std::uint64_t explored = 0;
  Schedule witness;  // a schedule with Tmax <= ell and at most k tardy jobs
};

// Is there a schedule with Tmax <= ell and at most k tardy jobs? Only early
// sets with at least n - k jobs are visited; the budget applies to that count.
DecisionResult decision_constraint(const Instance& instance, Int ell, Int k, const Budget& budget = {});

// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

}  // namespace bicrit
