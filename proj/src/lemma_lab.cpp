#include "bicrit/lemma_lab.hpp"

#include <algorithm>

#include "bicrit/classic.hpp"

namespace bicrit {

std::string_view to_string(JobStatus status) { return status == JobStatus::Early ? "Early" : "Tardy"; }

void DiscrepancyReport::merge(const DiscrepancyReport& other) {
  identity_failures.insert(identity_failures.end(), other.identity_failures.begin(), other.identity_failures.end());
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  feasibility_mismatches.insert(feasibility_mismatches.end(), other.feasibility_mismatches.begin(),
                                other.feasibility_mismatches.end());
  identities_checked += other.identities_checked;
  candidates += other.candidates;
  skipped += other.skipped;
  jobs_compared += other.jobs_compared;
  out_of_scope_disagreements += other.out_of_scope_disagreements;
}

namespace {

bool is_number(TagKind k) {
  return k == TagKind::NumberStar || k == TagKind::NegNumberStar || k == TagKind::Number || k == TagKind::NegNumber;
}

bool is_delimiter(TagKind k) { return k == TagKind::DelimiterStar || k == TagKind::Delimiter; }

// Membership in J_{<=j}: F_0, every F^1_i, and the number and delimiter jobs
// of periods 1..j.
bool in_prefix(const Tag& tag, int j) {
  if (tag.kind == TagKind::FillerZero || tag.kind == TagKind::FillerFirst) return true;
  return (is_number(tag.kind) || is_delimiter(tag.kind)) && tag.j <= j;
}

// Membership in J*_{<=j} = J_{<=j-1} plus the first-half jobs of period j.
bool in_star_prefix(const Tag& tag, int j) {
  if (in_prefix(tag, j - 1)) return true;
  const bool first_half =
      tag.kind == TagKind::NumberStar || tag.kind == TagKind::NegNumberStar || tag.kind == TagKind::DelimiterStar;
  return first_half && tag.j == j;
}

std::vector<int> positions_by_id(const Instance& instance) {
  int max_id = -1;
  for (const Job& job : instance.jobs) max_id = std::max(max_id, job.id);
  std::vector<int> pos(static_cast<std::size_t>(max_id + 1), -1);
  for (std::size_t k = 0; k < instance.size(); ++k) pos[instance.jobs[k].id] = static_cast<int>(k);
  return pos;
}

void fill_flags(const std::vector<int>& ids, const std::vector<int>& pos, std::vector<char>& flags) {
  std::fill(flags.begin(), flags.end(), 0);
  for (int id : ids) flags[pos[id]] = 1;
}

struct Outcome {
  Int tmax;
  int tardy = 0;
};

Outcome outcome(const Instance& instance, const std::vector<int>& order) {
  Outcome out;
  Int clock;
  for (int k : order) {
    clock += instance.jobs[k].proc;
    if (clock > instance.jobs[k].due) {
      ++out.tardy;
      out.tmax = std::max(out.tmax, clock - instance.jobs[k].due);
    }
  }
  return out;
}

void compare_jobs(const Instance& instance, const PredictedStatus& pred, const Evaluation& ev, bool in_scope,
                  DiscrepancyReport& report) {
  const auto pos = positions_by_id(instance);
  for (const JobPrediction& jp : pred.jobs) {
    const auto k = static_cast<std::size_t>(pos[jp.id]);
    const JobStatus actual = ev.is_tardy(k) ? JobStatus::Tardy : JobStatus::Early;
    if (!in_scope) {
      if (actual != jp.status) ++report.out_of_scope_disagreements;
      continue;
    }
    ++report.jobs_compared;
    if (actual != jp.status) report.mismatches.push_back({jp.id, label(instance.jobs[k].tag), jp.status, actual, jp.rule});
  }
}

}  // namespace

// ---- 3-Partition gadget -------------------------------------------------

DiscrepancyReport check_strong_identities(const Instance& instance) {
  const StrongMeta& meta = strong_meta(instance);
  DiscrepancyReport report;
  const Int n(meta.n);
  const Int m(meta.m);
  const Int& t = meta.t;
  const Int& alpha = meta.alpha;
  const Int a2 = alpha * alpha;
  const Int a3 = a2 * alpha;
  const Int eight_tenths = Int(8) * (a2 / 10);

  auto less = [&](std::string name, int j, Int lhs, Int rhs) {
    ++report.identities_checked;
    if (!(lhs < rhs)) report.identity_failures.push_back({std::move(name), j, lhs, rhs, "<"});
  };
  auto equal = [&](std::string name, int j, Int lhs, Int rhs) {
    ++report.identities_checked;
    if (lhs != rhs) report.identity_failures.push_back({std::move(name), j, lhs, rhs, "=="});
  };

  for (int jj = 1; jj <= meta.m; ++jj) {
    const Int j(jj);
    const Int& Delta_j = meta.Delta[jj];
    const Int& Delta_prev = meta.Delta[jj - 1];
    const Int& Dstar_j = meta.Delta_star[jj - 1];
    const Int& Dstar_next = meta.Delta_star[jj];

    std::optional<Int> max_star_due;  // over J*_{<=j} minus D*_j
    std::optional<Int> max_due;       // over J_{<=j} minus D_j
    Int p_star_prefix;                // p(J*_{<=j})
    Int p_prefix_prev;                // p(J_{<=j-1})
    for (const Job& job : instance.jobs) {
      const Tag& tag = job.tag;
      if (in_star_prefix(tag, jj)) {
        p_star_prefix += job.proc;
        if (!(tag.kind == TagKind::DelimiterStar && tag.j == jj))
          max_star_due = max_star_due ? std::max(*max_star_due, job.due) : job.due;
      }
      if (in_prefix(tag, jj) && !(tag.kind == TagKind::Delimiter && tag.j == jj))
        max_due = max_due ? std::max(*max_due, job.due) : job.due;
      if (in_prefix(tag, jj - 1)) p_prefix_prev += job.proc;
    }

    const Int first = max_star_due.value_or(Int(0)) + meta.ell;
    less("first-half due dates + ell < Delta_j", jj, first, Delta_j);
    equal("first-half due dates + ell, closed form", jj, first,
          Delta_j - eight_tenths - (Int(2) * m + 1) * t * alpha - m * t);

    const Int second = max_due.value_or(Int(0)) + meta.ell;
    less("period due dates + ell < Delta*_{j+1}", jj, second, Dstar_next);
    equal("period due dates + ell, closed form", jj, second,
          Dstar_next - eight_tenths - (Int(2) * m - 1) * t * alpha - (m - 1) * t);

    equal("p(J*_{<=j}) via Delta_j", jj, p_star_prefix, Delta_j - (n * a3 + a2 + Int(2) * j * t * alpha));
    equal("p(J*_{<=j}) via Delta*_j", jj, p_star_prefix, Dstar_j + n * a3 + j * t);

    equal("p(J_{<=j-1}) via Delta*_j", jj, p_prefix_prev,
          Dstar_j - (n * a3 + a2 + (m - j) * t * alpha + (m - j) * t));
    equal("p(J_{<=j-1}) via Delta_{j-1}", jj, p_prefix_prev, Delta_prev + n * a3 + (m - j + 1) * t * alpha);
  }
  return report;
}

PredictedStatus predict_strong(const StrongMeta& meta, const StrongCandidate& c) {
  if (c.n() != meta.n || c.m() != meta.m) throw PreconditionError("candidate does not match the gadget");
  PredictedStatus pred;
  if (!strong_margin_holds(meta.n, meta.m)) {
    pred.applicable = false;
    pred.reason = "n^2 = " + std::to_string(meta.n * meta.n) + " < 2m = " + std::to_string(2 * meta.m);
    return pred;
  }
  std::vector<Int> star_sum(meta.m + 1);
  std::vector<Int> main_sum(meta.m + 1);
  for (int i = 1; i <= meta.n; ++i) {
    for (int j = 1; j <= meta.m; ++j) {
      if (c.star[i - 1][j - 1] == Choice::Pos) star_sum[j] += meta.a[i - 1];
      if (c.main[i - 1][j - 1] == Choice::Pos) main_sum[j] += meta.a[i - 1];
    }
  }
  for (const auto& [tag, id] : meta.job_index) {
    JobPrediction jp{id, JobStatus::Early, {}};
    auto chosen = [&](bool star, bool pos) {
      const Choice ch = star ? c.star[tag.i - 1][tag.j - 1] : c.main[tag.i - 1][tag.j - 1];
      return (ch == Choice::Pos) == pos;
    };
    auto number = [&](bool selected) {
      jp.status = selected ? JobStatus::Early : JobStatus::Tardy;
      jp.rule = selected ? "number job in the set is early" : "number job outside the set is tardy";
    };
    switch (tag.kind) {
      case TagKind::FillerZero:
      case TagKind::FillerFirst:
      case TagKind::FillerLast: jp.rule = "filler jobs are early"; break;
      case TagKind::NumberStar: number(chosen(true, true)); break;
      case TagKind::NegNumberStar: number(chosen(true, false)); break;
      case TagKind::Number: number(chosen(false, true)); break;
      case TagKind::NegNumber: number(chosen(false, false)); break;
      case TagKind::DelimiterStar: {
        const bool early = star_sum[tag.j] >= Int(tag.j) * meta.t;
        jp.status = early ? JobStatus::Early : JobStatus::Tardy;
        jp.rule = "D*_j early iff selected star weights >= j*t";
        break;
      }
      case TagKind::Delimiter: {
        const bool early = main_sum[tag.j] <= Int(tag.j) * meta.t;
        jp.status = early ? JobStatus::Early : JobStatus::Tardy;
        jp.rule = "D_j early iff selected main weights <= j*t";
        break;
      }
      default: throw PreconditionError("unexpected job " + label(tag) + " in 3-Partition gadget");
    }
    pred.jobs.push_back(std::move(jp));
  }
  std::sort(pred.jobs.begin(), pred.jobs.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  pred.feasible = strong_choices_consistent(c);
  pred.feasibility_rule = "feasible iff no (J_{i,j}, ~J*_{i,j+1}) and no (J*_{i,j}, ~J_{i,j}) in the set";
  return pred;
}

DiscrepancyReport compare_strong(const Instance& instance, const StrongCandidate& candidate) {
  const StrongMeta& meta = strong_meta(instance);
  DiscrepancyReport report;
  const PredictedStatus pred = predict_strong(meta, candidate);
  if (!pred.applicable) {
    ++report.skipped;
    return report;
  }
  const Evaluation ev = evaluate(instance, strong_candidate_schedule(instance, candidate));
  const bool actual = is_feasible_tmax(ev, meta.ell);
  ++report.candidates;
  if (actual != pred.feasible) report.feasibility_mismatches.push_back({pred.feasible, actual, ev.tmax});
  compare_jobs(instance, pred, ev, pred.feasible, report);
  return report;
}

StrongCandidate random_strong_candidate(int n, int m, Rng& rng) {
  if (rng.coin()) {
    std::vector<int> switches(n);
    for (int& s : switches) s = static_cast<int>(rng.below(2 * m + 1));
    return strong_candidate_from_switches(m, switches);
  }
  StrongCandidate c = StrongCandidate::uniform(n, m, Choice::Neg);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      c.star[i][j] = rng.coin() ? Choice::Pos : Choice::Neg;
      c.main[i][j] = rng.coin() ? Choice::Pos : Choice::Neg;
    }
  }
  return c;
}

StrongSweep sweep_strong(const Instance& instance, const Budget& budget) {
  const StrongMeta& meta = strong_meta(instance);
  StrongSweep sweep;
  unsigned __int128 total = 1;
  for (int i = 0; i < meta.n; ++i) {
    total *= static_cast<unsigned>(2 * meta.m + 1);
    if (total > budget.max_subsets) {
      sweep.status = SolveStatus::BudgetExceeded;
      return sweep;
    }
  }
  const CanonicalProbe probe(instance);
  const auto pos = positions_by_id(instance);
  std::vector<char> flags(instance.size());
  for_each_strong_pattern(meta.n, meta.m, [&](const StrongCandidate& c) {
    ++sweep.explored;
    fill_flags(strong_early_ids(meta, c), pos, flags);
    const auto order = probe.order(flags, meta.ell);
    const Outcome out = outcome(instance, order);
    if (out.tmax > meta.ell) return;
    if (!sweep.best_tardy || out.tardy < *sweep.best_tardy) sweep.best_tardy = out.tardy;
    if (!sweep.witness && Int(out.tardy) <= meta.k) sweep.witness = c;
  });
  return sweep;
}

// ---- Partition gadget ---------------------------------------------------

PredictedStatus predict_weak(const WeakMeta& meta, const WeakCandidate& c) {
  if (c.n() != meta.n || static_cast<int>(c.main.size()) != meta.n)
    throw PreconditionError("candidate does not match the gadget");
  PredictedStatus pred;
  Int unselected_star;
  Int selected_main;
  for (int i = 1; i <= meta.n; ++i) {
    if (c.star[i - 1] == Choice::Neg) unselected_star += meta.a[i - 1];
    if (c.main[i - 1] == Choice::Pos) selected_main += meta.a[i - 1];
  }
  if (unselected_star > meta.t) {
    pred.applicable = false;
    pred.reason = "weights of the selected ~J*_i sum to " + unselected_star.to_string() + " > t = " + meta.t.to_string();
    return pred;
  }

  auto push = [&](int id, JobStatus status, std::string rule) { pred.jobs.push_back({id, status, std::move(rule)}); };
  Int prefix;  // sum of a_i0 over i0 <= i with J_i0 selected
  for (int i = 1; i <= meta.n; ++i) {
    const bool star_pos = c.star[i - 1] == Choice::Pos;
    const bool main_pos = c.main[i - 1] == Choice::Pos;
    if (main_pos) prefix += meta.a[i - 1];
    const bool prefix_ok = prefix <= meta.t;
    const int star_id = meta.job_index.at({TagKind::WeakStar, i, 0});
    const int neg_star_id = meta.job_index.at({TagKind::WeakNegStar, i, 0});
    const int main_id = meta.job_index.at({TagKind::WeakMain, i, 0});
    const int neg_main_id = meta.job_index.at({TagKind::WeakNegMain, i, 0});

    push(star_pos ? star_id : neg_star_id, JobStatus::Early, "selected star-side job is early");
    push(star_pos ? neg_star_id : star_id, JobStatus::Tardy, "unselected star-side job is tardy");
    for (int id : meta.filler_ids[i - 1]) push(id, JobStatus::Early, "filler jobs are early");

    JobStatus chosen;
    std::string rule;
    if (star_pos && main_pos) {
      chosen = prefix_ok ? JobStatus::Early : JobStatus::Tardy;
      rule = "J*_i and J_i selected: J_i early iff prefix sum over S <= t";
    } else if (star_pos) {
      chosen = JobStatus::Tardy;
      rule = "J*_i and ~J_i selected: ~J_i is tardy";
    } else if (main_pos) {
      chosen = JobStatus::Early;
      rule = "~J*_i and J_i selected: J_i is early";
    } else {
      chosen = prefix_ok ? JobStatus::Early : JobStatus::Tardy;
      rule = "~J*_i and ~J_i selected: ~J_i early iff prefix sum over S <= t";
    }
    push(main_pos ? main_id : neg_main_id, chosen, std::move(rule));
    push(main_pos ? neg_main_id : main_id, JobStatus::Tardy, "unselected main-side job is tardy");
  }
  std::sort(pred.jobs.begin(), pred.jobs.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  pred.feasible = c.star[meta.n - 1] == Choice::Pos || selected_main <= meta.t;
  pred.feasibility_rule = "Tmax <= ell iff J*_n selected or sum over S <= t";
  return pred;
}

DiscrepancyReport compare_weak(const Instance& instance, const WeakCandidate& candidate) {
  const WeakMeta& meta = weak_meta(instance);
  DiscrepancyReport report;
  const PredictedStatus pred = predict_weak(meta, candidate);
  if (!pred.applicable) {
    ++report.skipped;
    return report;
  }
  const Evaluation ev = evaluate(instance, weak_candidate_schedule(instance, candidate));
  const bool actual = is_feasible_tmax(ev, meta.ell);
  ++report.candidates;
  if (actual != pred.feasible) report.feasibility_mismatches.push_back({pred.feasible, actual, ev.tmax});
  compare_jobs(instance, pred, ev, true, report);
  return report;
}

WeakCandidate random_weak_candidate(int n, Rng& rng) {
  WeakCandidate c = WeakCandidate::uniform(n, Choice::Neg);
  for (int i = 0; i < n; ++i) {
    c.star[i] = rng.coin() ? Choice::Pos : Choice::Neg;
    c.main[i] = rng.coin() ? Choice::Pos : Choice::Neg;
  }
  return c;
}

WeakSweep sweep_weak(const Instance& instance, const Budget& budget) {
  const WeakMeta& meta = weak_meta(instance);
  WeakSweep sweep;
  if (2 * meta.n > 62 || (std::uint64_t{1} << (2 * meta.n)) > budget.max_subsets) {
    sweep.status = SolveStatus::BudgetExceeded;
    return sweep;
  }
  const CanonicalProbe probe(instance);
  const auto pos = positions_by_id(instance);
  std::vector<char> flags(instance.size());
  const std::uint64_t count = std::uint64_t{1} << (2 * meta.n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    WeakCandidate c = WeakCandidate::uniform(meta.n, Choice::Neg);
    for (int i = 0; i < meta.n; ++i) {
      c.star[i] = (mask >> (2 * i)) & 1U ? Choice::Pos : Choice::Neg;
      c.main[i] = (mask >> (2 * i + 1)) & 1U ? Choice::Pos : Choice::Neg;
    }
    ++sweep.explored;
    fill_flags(weak_early_ids(meta, c), pos, flags);
    const Outcome out = outcome(instance, probe.order(flags, meta.ell));
    if (out.tmax > meta.ell) continue;
    if (!sweep.best_tardy || out.tardy < *sweep.best_tardy) sweep.best_tardy = out.tardy;
    if (!sweep.witness && Int(out.tardy) <= meta.k) {
      sweep.witness = c;
      sweep.achievable = true;
    }
  }
  return sweep;
}

}  // namespace bicrit
