#include "bicrit/classic.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

namespace bicrit {

TieBreakRule::TieBreakRule() {
  constexpr std::array<TagKind, kTagKindCount> order = {
      TagKind::NumberStar,   TagKind::NegNumberStar, TagKind::Number,      TagKind::NegNumber,
      TagKind::DelimiterStar, TagKind::Delimiter,    TagKind::FillerZero,  TagKind::FillerFirst,
      TagKind::FillerLast,   TagKind::WeakMain,      TagKind::WeakNegMain, TagKind::WeakStar,
      TagKind::WeakNegStar,  TagKind::WeakFiller,    TagKind::GadgetStar,  TagKind::Plain,
  };
  for (int r = 0; r < kTagKindCount; ++r) ranks_[static_cast<int>(order[r])] = r;
}

TieBreakRule TieBreakRule::by_id() {
  TieBreakRule rule;
  rule.ranks_.fill(0);
  return rule;
}

TieBreakRule& TieBreakRule::set_rank(TagKind kind, int rank) {
  ranks_[static_cast<int>(kind)] = rank;
  return *this;
}

std::vector<char> membership(const Instance& instance, std::span<const int> ids) {
  std::vector<char> flags(instance.size(), 0);
  if (ids.empty()) return flags;
  std::vector<std::pair<int, int>> by_id;
  by_id.reserve(instance.size());
  for (std::size_t k = 0; k < instance.size(); ++k) by_id.emplace_back(instance.jobs[k].id, static_cast<int>(k));
  std::sort(by_id.begin(), by_id.end());
  for (int id : ids) {
    auto it = std::lower_bound(by_id.begin(), by_id.end(), std::pair{id, -1});
    if (it == by_id.end() || it->first != id)
      throw PreconditionError("job id " + std::to_string(id) + " is not part of the instance");
    flags[it->second] = 1;
  }
  return flags;
}

namespace {

std::vector<int> ids_of(const Instance& instance, const std::vector<int>& positions) {
  std::vector<int> ids;
  ids.reserve(positions.size());
  for (int k : positions) ids.push_back(instance.jobs[k].id);
  return ids;
}

std::vector<int> positions_by_due_then_id(const Instance& instance) {
  std::vector<int> order(instance.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const Job& a = instance.jobs[x];
    const Job& b = instance.jobs[y];
    return std::tie(a.due, a.id) < std::tie(b.due, b.id);
  });
  return order;
}

}  // namespace

EddResult edd_schedule(const Instance& instance) {
  EddResult result;
  auto order = positions_by_due_then_id(instance);
  Int clock;
  for (int k : order) {
    clock += instance.jobs[k].proc;
    result.tmax = std::max(result.tmax, clock - instance.jobs[k].due);
  }
  result.schedule.order = ids_of(instance, order);
  return result;
}

MooreResult moore_hodgson(const Instance& instance) {
  auto order = positions_by_due_then_id(instance);
  auto longer = [&](int x, int y) {
    const Job& a = instance.jobs[x];
    const Job& b = instance.jobs[y];
    return std::tie(a.proc, a.id) < std::tie(b.proc, b.id);
  };
  std::priority_queue<int, std::vector<int>, decltype(longer)> heap(longer);
  std::vector<char> rejected(instance.size(), 0);
  MooreResult result;
  Int clock;
  for (int k : order) {
    heap.push(k);
    clock += instance.jobs[k].proc;
    if (clock > instance.jobs[k].due) {
      int drop = heap.top();
      heap.pop();
      clock -= instance.jobs[drop].proc;
      rejected[drop] = 1;
      result.rejected.push_back(instance.jobs[drop].id);
    }
  }
  std::vector<int> early;
  std::vector<int> late;
  for (int k : order)
    if (!rejected[k]) early.push_back(instance.jobs[k].id);
  for (int k = 0; k < static_cast<int>(instance.size()); ++k)
    if (rejected[k]) late.push_back(instance.jobs[k].id);
  std::sort(late.begin(), late.end());
  result.min_tardy = static_cast<int>(late.size());
  result.schedule.order = std::move(early);
  result.schedule.order.insert(result.schedule.order.end(), late.begin(), late.end());
  return result;
}

CanonicalProbe::CanonicalProbe(const Instance& instance, const TieBreakRule& ties) {
  const std::size_t n = instance.size();
  base_.resize(n);
  std::iota(base_.begin(), base_.end(), 0);
  std::sort(base_.begin(), base_.end(), [&](int x, int y) {
    const Job& a = instance.jobs[x];
    const Job& b = instance.jobs[y];
    return std::tuple(a.due, ties.rank(a.tag.kind), a.id) < std::tuple(b.due, ties.rank(b.tag.kind), b.id);
  });
  proc_.reserve(n);
  due_.reserve(n);
  rank_.reserve(n);
  id_.reserve(n);
  for (int k : base_) {
    const Job& job = instance.jobs[k];
    proc_.push_back(job.proc);
    due_.push_back(job.due);
    rank_.push_back(ties.rank(job.tag.kind));
    id_.push_back(job.id);
    total_proc_ += job.proc;
  }
}

// Merges the early jobs (keyed by d) with the others (keyed by d + ell); both
// subsequences of base_ are already sorted by their key. `visit(s, clock,
// limit)` gets the base_ slot, the completion time and the modified due date,
// and returns false to stop.
template <typename Visit>
bool CanonicalProbe::walk(std::span<const char> early, Int ell, Visit&& visit) const {
  const std::size_t n = base_.size();
  std::size_t e = 0;
  std::size_t l = 0;
  auto next_early = [&] { while (e < n && !early[base_[e]]) ++e; };
  auto next_late = [&] { while (l < n && early[base_[l]]) ++l; };
  next_early();
  next_late();
  Int clock;
  while (e < n || l < n) {
    bool take_early;
    if (l >= n) {
      take_early = true;
    } else if (e >= n) {
      take_early = false;
    } else {
      Int late_key = due_[l] + ell;
      take_early = std::tuple(due_[e], rank_[e], id_[e]) < std::tuple(late_key, rank_[l], id_[l]);
    }
    std::size_t s = take_early ? e : l;
    Int limit = take_early ? due_[s] : due_[s] + ell;
    clock += proc_[s];
    if (!visit(s, clock, limit)) return false;
    if (take_early) {
      ++e;
      next_early();
    } else {
      ++l;
      next_late();
    }
  }
  return true;
}

bool CanonicalProbe::feasible(std::span<const char> early, Int ell) const {
  return walk(early, ell, [](std::size_t, Int clock, Int limit) { return clock <= limit; });
}

std::vector<int> CanonicalProbe::order(std::span<const char> early, Int ell) const {
  std::vector<int> out;
  out.reserve(base_.size());
  walk(early, ell, [&](std::size_t s, Int, Int) {
    out.push_back(base_[s]);
    return true;
  });
  return out;
}

std::optional<Int> CanonicalProbe::min_ell(std::span<const char> early) const {
  if (!feasible(early, total_proc_)) return std::nullopt;
  Int lo = 0;
  Int hi = total_proc_;
  while (lo < hi) {
    Int mid = lo + (hi - lo) / 2;
    if (feasible(early, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Schedule canonical_schedule(const Instance& instance, std::span<const int> early_ids, Int ell,
                            const TieBreakRule& ties) {
  CanonicalProbe probe(instance, ties);
  auto early = membership(instance, early_ids);
  return {ids_of(instance, probe.order(early, ell))};
}

MinTmaxResult min_tmax_given_early(const Instance& instance, std::span<const int> early_ids,
                                   const TieBreakRule& ties) {
  CanonicalProbe probe(instance, ties);
  auto early = membership(instance, early_ids);
  MinTmaxResult result;
  result.ell = probe.min_ell(early);
  if (result.ell) {
    result.schedule.order = ids_of(instance, probe.order(early, *result.ell));
  } else {
    result.schedule = edd_for_set(instance, early_ids).schedule;
  }
  return result;
}

EddForSetResult edd_for_set(const Instance& instance, std::span<const int> chosen) {
  auto flags = membership(instance, chosen);
  EddForSetResult result;
  Int clock;
  for (int k : positions_by_due_then_id(instance)) {
    if (!flags[k]) continue;
    clock += instance.jobs[k].proc;
    if (clock > instance.jobs[k].due) result.all_chosen_early = false;
    result.schedule.order.push_back(instance.jobs[k].id);
  }
  std::vector<int> rest;
  for (std::size_t k = 0; k < instance.size(); ++k)
    if (!flags[k]) rest.push_back(instance.jobs[k].id);
  std::sort(rest.begin(), rest.end());
  result.schedule.order.insert(result.schedule.order.end(), rest.begin(), rest.end());
  return result;
}

}  // namespace bicrit
