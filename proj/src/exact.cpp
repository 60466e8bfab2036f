#include "bicrit/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace bicrit {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

constexpr int kMaxEnumeratedJobs = 62;

bool subsets_within(std::size_t n, const Budget& budget) {
  return n <= kMaxEnumeratedJobs && (std::uint64_t{1} << n) <= budget.max_subsets;
}

// Visits all s-subsets of {0..n-1} as bit masks in increasing numeric order
// (Gosper's hack). `f` returns false to stop; returns whether it ran to the end.
template <typename F>
bool for_each_subset_of_size(int n, int s, F&& f) {
  if (s == 0) return f(std::uint64_t{0});
  std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    if (!f(mask)) return false;
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return true;
}

void mask_to_flags(std::uint64_t mask, std::vector<char>& flags) {
  for (std::size_t k = 0; k < flags.size(); ++k) flags[k] = static_cast<char>((mask >> k) & 1U);
}

std::vector<int> to_ids(const Instance& instance, const std::vector<int>& positions) {
  std::vector<int> ids;
  ids.reserve(positions.size());
  for (int k : positions) ids.push_back(instance.jobs[k].id);
  return ids;
}

OptResult finish(const Instance& instance, Schedule schedule, std::uint64_t explored) {
  OptResult result;
  Evaluation ev = evaluate(instance, schedule);
  result.schedule = std::move(schedule);
  result.tmax = ev.tmax;
  result.num_tardy = ev.num_tardy;
  result.explored = explored;
  result.status = SolveStatus::Optimal;
  return result;
}

OptResult with_status(SolveStatus status, std::uint64_t explored = 0) {
  OptResult result;
  result.status = status;
  result.explored = explored;
  return result;
}

struct Realized {
  Int tmax;
  int num_tardy = 0;
};

Realized realize(const Instance& instance, const std::vector<int>& positions) {
  Realized r;
  Int clock;
  for (int k : positions) {
    clock += instance.jobs[k].proc;
    if (clock > instance.jobs[k].due) {
      r.tmax = std::max(r.tmax, clock - instance.jobs[k].due);
      ++r.num_tardy;
    }
  }
  return r;
}

}  // namespace

OptResult solve_constraint(const Instance& instance, Int ell, const Budget& budget) {
  const int n = static_cast<int>(instance.size());
  if (!subsets_within(instance.size(), budget)) return with_status(SolveStatus::BudgetExceeded);
  if (ell < 0) return with_status(SolveStatus::Infeasible);
  CanonicalProbe probe(instance);
  std::vector<char> flags(instance.size());
  std::uint64_t explored = 0;
  std::optional<std::uint64_t> found;
  for (int s = n; s >= 0 && !found; --s) {
    for_each_subset_of_size(n, s, [&](std::uint64_t mask) {
      ++explored;
      mask_to_flags(mask, flags);
      if (!probe.feasible(flags, ell)) return true;
      found = mask;
      return false;
    });
  }
  if (!found) return with_status(SolveStatus::Infeasible, explored);
  mask_to_flags(*found, flags);
  OptResult result = finish(instance, {to_ids(instance, probe.order(flags, ell))}, explored);
  result.objective = {Int(result.num_tardy)};
  return result;
}

OptResult solve_lex_tmax_then_u(const Instance& instance, const Budget& budget) {
  Int best_tmax = edd_schedule(instance).tmax;
  OptResult result = solve_constraint(instance, best_tmax, budget);
  if (result.optimal()) result.objective = {result.tmax, Int(result.num_tardy)};
  return result;
}

OptResult solve_lex_u_then_tmax(const Instance& instance, const Budget& budget) {
  const int n = static_cast<int>(instance.size());
  if (n > kMaxEnumeratedJobs) return with_status(SolveStatus::BudgetExceeded);
  const int min_tardy = moore_hodgson(instance).min_tardy;
  if (binomial(n, n - min_tardy) > budget.max_subsets) return with_status(SolveStatus::BudgetExceeded);
  CanonicalProbe probe(instance);
  std::vector<char> flags(instance.size());
  std::uint64_t explored = 0;
  std::optional<Int> best;
  std::uint64_t best_mask = 0;
  for_each_subset_of_size(n, n - min_tardy, [&](std::uint64_t mask) {
    ++explored;
    mask_to_flags(mask, flags);
    auto ell = probe.min_ell(flags);
    if (ell && (!best || *ell < *best)) {
      best = ell;
      best_mask = mask;
    }
    return true;
  });
  // Moore-Hodgson guarantees at least one early set of this size.
  if (!best) return with_status(SolveStatus::Infeasible, explored);
  mask_to_flags(best_mask, flags);
  OptResult result = finish(instance, {to_ids(instance, probe.order(flags, *best))}, explored);
  result.objective = {Int(result.num_tardy), result.tmax};
  return result;
}

OptResult solve_weighted_sum(const Instance& instance, Int w1, Int w2, const Budget& budget) {
  if (w1 < 0 || w2 < 0) throw PreconditionError("weights must be nonnegative");
  const int n = static_cast<int>(instance.size());
  if (!subsets_within(instance.size(), budget)) return with_status(SolveStatus::BudgetExceeded);
  CanonicalProbe probe(instance);
  std::vector<char> flags(instance.size());
  std::uint64_t explored = 0;
  std::optional<Int> best;
  std::vector<int> best_order;
  for (int s = n; s >= 0; --s) {
    for_each_subset_of_size(n, s, [&](std::uint64_t mask) {
      ++explored;
      mask_to_flags(mask, flags);
      auto ell = probe.min_ell(flags);
      if (!ell) return true;
      auto order = probe.order(flags, *ell);
      Realized r = realize(instance, order);
      Int score = w1 * r.tmax + w2 * Int(r.num_tardy);
      if (!best || score < *best) {
        best = score;
        best_order = std::move(order);
      }
      return true;
    });
  }
  OptResult result = finish(instance, {to_ids(instance, best_order)}, explored);
  result.objective = {*best};
  return result;
}

OptResult solve(const Instance& instance, const Variant& variant, const Budget& budget) {
  auto need = [](const std::optional<Int>& v, const char* name) {
    if (!v) throw PreconditionError(std::string("variant parameter missing: ") + name);
    return *v;
  };
  switch (variant.kind) {
    case VariantKind::ConstraintDecision:
    case VariantKind::ConstraintOpt: return solve_constraint(instance, need(variant.ell, "ell"), budget);
    case VariantKind::LexTmaxThenU: return solve_lex_tmax_then_u(instance, budget);
    case VariantKind::LexUThenTmax: return solve_lex_u_then_tmax(instance, budget);
    case VariantKind::WeightedSum:
      return solve_weighted_sum(instance, need(variant.w1, "w1"), need(variant.w2, "w2"), budget);
    case VariantKind::None: break;
  }
  throw PreconditionError("instance has no variant to solve");
}

OptResult brute_force_permutations(const Instance& instance, const Variant& objective, const Budget& budget) {
  const std::size_t n = instance.size();
  std::uint64_t count = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    count *= i;
    if (count > budget.max_perms) return with_status(SolveStatus::BudgetExceeded);
  }
  if (objective.kind == VariantKind::None) throw PreconditionError("brute force needs an objective");
  const bool constrained =
      objective.kind == VariantKind::ConstraintOpt || objective.kind == VariantKind::ConstraintDecision;
  if (constrained && !objective.ell) throw PreconditionError("constraint objective needs ell");
  if (objective.kind == VariantKind::WeightedSum && (!objective.w1 || !objective.w2))
    throw PreconditionError("weighted objective needs w1 and w2");

  auto key = [&](Int tmax, int tardy) -> std::vector<Int> {
    switch (objective.kind) {
      case VariantKind::LexTmaxThenU: return {tmax, Int(tardy)};
      case VariantKind::LexUThenTmax: return {Int(tardy), tmax};
      case VariantKind::WeightedSum: return {*objective.w1 * tmax + *objective.w2 * Int(tardy)};
      default: return {Int(tardy)};
    }
  };

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t explored = 0;
  std::optional<std::vector<Int>> best;
  std::vector<int> best_perm;
  do {
    ++explored;
    Realized r = realize(instance, perm);
    if (constrained && r.tmax > *objective.ell) continue;
    auto k = key(r.tmax, r.num_tardy);
    if (!best || k < *best) {
      best = std::move(k);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!best) return with_status(SolveStatus::Infeasible, explored);
  OptResult result = finish(instance, {to_ids(instance, best_perm)}, explored);
  result.objective = std::move(*best);
  return result;
}

DecisionResult decision_constraint(const Instance& instance, Int ell, Int k, const Budget& budget) {
  const int n = static_cast<int>(instance.size());
  DecisionResult result;
  if (ell < 0 || k < 0) return result;
  const int min_size = k >= Int(n) ? 0 : n - static_cast<int>(k.to_int64());
  if (n > kMaxEnumeratedJobs) {
    result.status = SolveStatus::BudgetExceeded;
    return result;
  }
  std::uint64_t planned = 0;
  for (int s = n; s >= min_size; --s) {
    planned += binomial(n, s);
    if (planned > budget.max_subsets) {
      result.status = SolveStatus::BudgetExceeded;
      return result;
    }
  }
  CanonicalProbe probe(instance);
  std::vector<char> flags(instance.size());
  for (int s = n; s >= min_size && !result.answer; --s) {
    for_each_subset_of_size(n, s, [&](std::uint64_t mask) {
      ++result.explored;
      mask_to_flags(mask, flags);
      if (!probe.feasible(flags, ell)) return true;
      result.answer = true;
      result.witness.order = to_ids(instance, probe.order(flags, ell));
      return false;
    });
  }
  return result;
}

}  // namespace bicrit
