#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicrit/exact.hpp"
#include "bicrit/model.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

enum class JobStatus { Early, Tardy };

std::string_view to_string(JobStatus status);

struct JobPrediction {
  int id = 0;
  JobStatus status = JobStatus::Early;
  std::string rule;  // which clause of the characterization fired
};

// Predicted early/tardy status of every gadget job in the canonical schedule
// of a candidate set, plus whether that schedule meets Tmax <= ell.
struct PredictedStatus {
  bool applicable = true;  // false: the candidate is outside the characterization's hypotheses
  std::string reason;      // why it is not applicable
  std::vector<JobPrediction> jobs;  // ascending id
  bool feasible = false;
  std::string feasibility_rule;
};

struct Mismatch {
  int id = 0;
  std::string job;  // label such as "~J*_{2,1}"
  JobStatus predicted = JobStatus::Early;
  JobStatus actual = JobStatus::Early;
  std::string rule;
};

struct IdentityFailure {
  std::string identity;
  int j = 0;
  Int lhs;
  Int rhs;
  std::string relation;  // "<" or "=="
};

struct FeasibilityMismatch {
  bool predicted = false;
  bool actual = false;
  Int tmax;
};

struct DiscrepancyReport {
  std::vector<IdentityFailure> identity_failures;
  std::vector<Mismatch> mismatches;
  std::vector<FeasibilityMismatch> feasibility_mismatches;
  std::uint64_t identities_checked = 0;
  std::uint64_t candidates = 0;      // candidates compared
  std::uint64_t skipped = 0;         // candidates outside the hypotheses
  std::uint64_t jobs_compared = 0;
  // Per-job disagreements on candidates whose schedules are predicted
  // infeasible; recorded for information only, never part of empty().
  std::uint64_t out_of_scope_disagreements = 0;

  bool empty() const {
    return identity_failures.empty() && mismatches.empty() && feasibility_mismatches.empty();
  }
  void merge(const DiscrepancyReport& other);
};

// ---- 3-Partition gadget -------------------------------------------------

// Recomputes, by direct summation over the jobs of `instance`, the due-date
// bounds and processing-time identities of the job sets J*_{<=j} and
// J_{<=j-1}, and compares them with the closed forms in the gadget constants.
DiscrepancyReport check_strong_identities(const Instance& instance);

// The slack 0.1*alpha^2 = n^2*t*alpha left in the due dates must absorb the
// (2m-1)*t*alpha term of D*_1, so that a selected ~J_{i,1} precedes an
// unselected ~J*_{i,1}. That needs n^2 >= 2m, which n = 3m always meets.
inline bool strong_margin_holds(int n, int m) { return n * n >= 2 * m; }

// NotApplicable (applicable == false) when strong_margin_holds fails.
PredictedStatus predict_strong(const StrongMeta& meta, const StrongCandidate& candidate);

// Prediction against evaluate(canonical schedule). Feasibility is always
// compared; per-job statuses only when the candidate is predicted feasible.
// Non-applicable gadgets only bump `skipped`.
DiscrepancyReport compare_strong(const Instance& instance, const StrongCandidate& candidate);

// Half monotone switch patterns, half independent coin flips.
StrongCandidate random_strong_candidate(int n, int m, Rng& rng);

// Calls f(candidate) for each of the (2m+1)^n switch patterns in mixed-radix
// order (index 1 varies slowest).
template <typename F>
void for_each_strong_pattern(int n, int m, F&& f) {
  std::vector<int> switches(n, 0);
  while (true) {
    f(strong_candidate_from_switches(m, switches));
    int k = n - 1;
    while (k >= 0 && switches[k] == 2 * m) switches[k--] = 0;
    if (k < 0) return;
    ++switches[k];
  }
}

struct StrongSweep {
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t explored = 0;
  std::optional<int> best_tardy;  // over candidates with Tmax <= ell
  std::optional<StrongCandidate> witness;  // first candidate with Tmax <= ell and at most k tardy
};

// Evaluates the canonical schedule of every consistent candidate set
// ((2m+1)^n of them); BudgetExceeded when that exceeds budget.max_subsets.
StrongSweep sweep_strong(const Instance& instance, const Budget& budget = {});

// ---- Partition gadget ---------------------------------------------------

// NotApplicable (applicable == false) when the unselected-star weights exceed t.
PredictedStatus predict_weak(const WeakMeta& meta, const WeakCandidate& candidate);

// Prediction against evaluate(canonical schedule); feasibility and every
// job are compared. Non-applicable candidates only bump `skipped`.
DiscrepancyReport compare_weak(const Instance& instance, const WeakCandidate& candidate);

WeakCandidate random_weak_candidate(int n, Rng& rng);

struct WeakSweep {
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t explored = 0;
  bool achievable = false;  // some candidate reaches at most 2n tardy with Tmax <= ell
  std::optional<int> best_tardy;
  std::optional<WeakCandidate> witness;
};

// All 4^n candidate sets; BudgetExceeded when 4^n exceeds budget.max_subsets.
WeakSweep sweep_weak(const Instance& instance, const Budget& budget = {});

}  // namespace bicrit
