#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "bicrit/model.hpp"

namespace bicrit {

// Strict total order used among jobs whose (modified) due dates tie: the
// lower tag rank goes first, then the lower id.
//
// The default ranks put J*_{i,1} before its copy F^1_i, and in the Partition
// gadget put J_i before J*_i and J*_i before the fillers of group i.
class TieBreakRule {
public:
  TieBreakRule();

  // Every tag kind gets the same rank, so ties fall through to the id.
  static TieBreakRule by_id();

  int rank(TagKind kind) const { return ranks_[static_cast<int>(kind)]; }
  TieBreakRule& set_rank(TagKind kind, int rank);

  friend bool operator==(const TieBreakRule&, const TieBreakRule&) = default;

private:
  std::array<int, kTagKindCount> ranks_{};
};

// Membership flags aligned with Instance::jobs. Throws PreconditionError on ids
// that are not in the instance.
std::vector<char> membership(const Instance& instance, std::span<const int> ids);

struct EddResult {
  Schedule schedule;
  Int tmax;
};

// Jackson's rule: order by (due, id); the result minimizes Tmax.
EddResult edd_schedule(const Instance& instance);

struct MooreResult {
  Schedule schedule;  // early jobs in EDD order, then the rejected jobs by id
  int min_tardy = 0;
  std::vector<int> rejected;  // ids, in rejection order
};

// Moore-Hodgson. When the current prefix is late, the job with the largest
// processing time is rejected (largest id on ties).
MooreResult moore_hodgson(const Instance& instance);

// Jobs in `early_ids` are ordered by d, all others by d + ell, ties per `ties`.
Schedule canonical_schedule(const Instance& instance, std::span<const int> early_ids, Int ell,
                            const TieBreakRule& ties = TieBreakRule{});

struct MinTmaxResult {
  std::optional<Int> ell;  // nullopt: the required jobs cannot all be early
  Schedule schedule;       // canonical schedule at `ell` (EDD for the set when infeasible)

  bool feasible() const { return ell.has_value(); }
};

// Least ell >= 0 for which the canonical schedule keeps every job of
// `early_ids` early with Tmax <= ell, found by binary search on [0, sum p].
MinTmaxResult min_tmax_given_early(const Instance& instance, std::span<const int> early_ids,
                                   const TieBreakRule& ties = TieBreakRule{});

struct EddForSetResult {
  Schedule schedule;
  bool all_chosen_early = true;
};

// Chosen jobs by (due, id), then the rest by id.
EddForSetResult edd_for_set(const Instance& instance, std::span<const int> chosen);

// Precomputed canonical-schedule engine for repeated probes over one instance.
// All membership spans are aligned with Instance::jobs.
class CanonicalProbe {
public:
  explicit CanonicalProbe(const Instance& instance, const TieBreakRule& ties = TieBreakRule{});

  std::size_t size() const { return proc_.size(); }
  Int total_proc() const { return total_proc_; }

  // True iff in the canonical schedule every early-set job meets d and every
  // other job meets d + ell (equivalently: early set early and Tmax <= ell).
  bool feasible(std::span<const char> early, Int ell) const;

  // Canonical order as positions into Instance::jobs.
  std::vector<int> order(std::span<const char> early, Int ell) const;

  std::optional<Int> min_ell(std::span<const char> early) const;

private:
  template <typename Visit>
  bool walk(std::span<const char> early, Int ell, Visit&& visit) const;

  // Jobs sorted by (due, rank, id); the arrays below follow that order.
  std::vector<int> base_;
  std::vector<Int> proc_;
  std::vector<Int> due_;
  std::vector<int> rank_;
  std::vector<int> id_;
  Int total_proc_;
};

}  // namespace bicrit
