#include "bicrit/model.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

namespace bicrit {

namespace {

constexpr std::array<std::string_view, kTagKindCount> kTagNames = {
    "Plain",       "NumberStar",  "NegNumberStar", "Number",    "NegNumber",   "DelimiterStar",
    "Delimiter",   "FillerZero",  "FillerFirst",   "FillerLast", "WeakStar",   "WeakNegStar",
    "WeakMain",    "WeakNegMain", "WeakFiller",    "GadgetStar",
};

constexpr std::array<std::string_view, 6> kVariantNames = {
    "None", "ConstraintDecision", "ConstraintOpt", "LexTmaxThenU", "LexUThenTmax", "WeightedSum",
};

// Maps job ids to positions. Dense ids (the common case) use a flat table.
class IdIndex {
public:
  explicit IdIndex(const Instance& instance) {
    int max_id = -1;
    bool nonneg = true;
    for (const Job& job : instance.jobs) {
      nonneg = nonneg && job.id >= 0;
      max_id = std::max(max_id, job.id);
    }
    if (nonneg && max_id < static_cast<int>(4 * instance.size() + 16)) {
      dense_.assign(static_cast<std::size_t>(max_id) + 1, -1);
      for (std::size_t k = 0; k < instance.size(); ++k) dense_[instance.jobs[k].id] = static_cast<int>(k);
    } else {
      for (std::size_t k = 0; k < instance.size(); ++k) sparse_.emplace(instance.jobs[k].id, static_cast<int>(k));
    }
  }

  int find(int id) const {
    if (!dense_.empty() || sparse_.empty()) {
      if (id < 0 || id >= static_cast<int>(dense_.size())) return -1;
      return dense_[id];
    }
    auto it = sparse_.find(id);
    return it == sparse_.end() ? -1 : it->second;
  }

private:
  std::vector<int> dense_;
  std::unordered_map<int, int> sparse_;
};

}  // namespace

std::string_view to_string(TagKind kind) { return kTagNames[static_cast<int>(kind)]; }

std::optional<TagKind> tag_kind_from_string(std::string_view name) {
  for (int k = 0; k < kTagKindCount; ++k)
    if (kTagNames[k] == name) return static_cast<TagKind>(k);
  return std::nullopt;
}

std::string_view to_string(VariantKind kind) { return kVariantNames[static_cast<int>(kind)]; }

std::optional<VariantKind> variant_kind_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kVariantNames.size(); ++k)
    if (kVariantNames[k] == name) return static_cast<VariantKind>(k);
  return std::nullopt;
}

std::string label(const Tag& tag) {
  auto ij = [&] { return "_{" + std::to_string(tag.i) + "," + std::to_string(tag.j) + "}"; };
  auto one = [](int x) { return "_{" + std::to_string(x) + "}"; };
  switch (tag.kind) {
    case TagKind::Plain: return "J";
    case TagKind::NumberStar: return "J*" + ij();
    case TagKind::NegNumberStar: return "~J*" + ij();
    case TagKind::Number: return "J" + ij();
    case TagKind::NegNumber: return "~J" + ij();
    case TagKind::DelimiterStar: return "D*" + one(tag.j);
    case TagKind::Delimiter: return "D" + one(tag.j);
    case TagKind::FillerZero: return "F_0";
    case TagKind::FillerFirst: return "F^1" + one(tag.i);
    case TagKind::FillerLast: return "F^m" + one(tag.i);
    case TagKind::WeakStar: return "J*" + one(tag.i);
    case TagKind::WeakNegStar: return "~J*" + one(tag.i);
    case TagKind::WeakMain: return "J" + one(tag.i);
    case TagKind::WeakNegMain: return "~J" + one(tag.i);
    case TagKind::WeakFiller: return "F" + one(tag.i);
    case TagKind::GadgetStar: return "J*";
  }
  return "?";
}

Int Instance::total_proc() const {
  Int sum;
  for (const Job& job : jobs) sum += job.proc;
  return sum;
}

std::size_t Instance::index_of(int id) const {
  for (std::size_t k = 0; k < jobs.size(); ++k)
    if (jobs[k].id == id) return k;
  throw std::out_of_range("no job with id " + std::to_string(id));
}

Evaluation evaluate(const Instance& instance, const Schedule& schedule) {
  const std::size_t n = instance.size();
  if (schedule.order.size() != n)
    throw PermutationError("schedule has " + std::to_string(schedule.order.size()) +
                           " entries for " + std::to_string(n) + " jobs");
  IdIndex index(instance);
  Evaluation ev;
  ev.completion.assign(n, Int{});
  ev.tardiness.assign(n, Int{});
  std::vector<char> seen(n, 0);
  Int clock;
  for (int id : schedule.order) {
    int k = index.find(id);
    if (k < 0) throw PermutationError("schedule references unknown job id " + std::to_string(id));
    if (seen[k]) throw PermutationError("schedule repeats job id " + std::to_string(id));
    seen[k] = 1;
    const Job& job = instance.jobs[k];
    clock += job.proc;
    ev.completion[k] = clock;
    if (clock > job.due) {
      ev.tardiness[k] = clock - job.due;
      ev.tmax = std::max(ev.tmax, ev.tardiness[k]);
      ++ev.num_tardy;
      ev.tardy_set.push_back(job.id);
    }
  }
  std::sort(ev.tardy_set.begin(), ev.tardy_set.end());
  return ev;
}

bool is_feasible_tmax(const Evaluation& evaluation, Int ell) { return evaluation.tmax <= ell; }

std::string_view to_string(FindingCode code) {
  switch (code) {
    case FindingCode::EmptyInstance: return "EmptyInstance";
    case FindingCode::DuplicateId: return "DuplicateId";
    case FindingCode::NegativeId: return "NegativeId";
    case FindingCode::NegativeProc: return "NegativeProc";
    case FindingCode::NegativeDue: return "NegativeDue";
    case FindingCode::MissingParameter: return "MissingParameter";
    case FindingCode::NegativeParameter: return "NegativeParameter";
    case FindingCode::NonPositiveWeight: return "NonPositiveWeight";
    case FindingCode::KExceedsJobCount: return "kExceedsJobCount";
  }
  return "?";
}

bool ValidationReport::ok() const {
  return std::none_of(findings.begin(), findings.end(),
                      [](const Finding& f) { return f.severity == Severity::Error; });
}

ValidationReport validate_instance(const Instance& instance) {
  ValidationReport report;
  auto error = [&](FindingCode code, std::string detail) {
    report.findings.push_back({Severity::Error, code, std::move(detail)});
  };
  if (instance.jobs.empty()) error(FindingCode::EmptyInstance, "instance has no jobs");

  std::unordered_set<int> ids;
  for (const Job& job : instance.jobs) {
    std::string who = "job " + std::to_string(job.id);
    if (!ids.insert(job.id).second) error(FindingCode::DuplicateId, who + " appears more than once");
    if (job.id < 0) error(FindingCode::NegativeId, who + " has a negative id");
    if (job.proc < 0) error(FindingCode::NegativeProc, who + " has p = " + job.proc.to_string());
    if (job.due < 0) error(FindingCode::NegativeDue, who + " has d = " + job.due.to_string());
  }

  const Variant& v = instance.variant;
  auto require = [&](const std::optional<Int>& value, std::string_view name) {
    if (!value) {
      error(FindingCode::MissingParameter, std::string(to_string(v.kind)) + " needs " + std::string(name));
    } else if (*value < 0) {
      error(FindingCode::NegativeParameter, std::string(name) + " = " + value->to_string());
    }
  };
  switch (v.kind) {
    case VariantKind::ConstraintDecision:
      require(v.ell, "ell");
      require(v.k, "k");
      if (v.k && *v.k > Int(instance.size()))
        report.findings.push_back({Severity::Warning, FindingCode::KExceedsJobCount,
                                   "k = " + v.k->to_string() + " exceeds the job count " +
                                       std::to_string(instance.size())});
      break;
    case VariantKind::ConstraintOpt: require(v.ell, "ell"); break;
    case VariantKind::WeightedSum:
      for (auto [value, name] : {std::pair{v.w1, "w1"}, std::pair{v.w2, "w2"}}) {
        if (!value) {
          error(FindingCode::MissingParameter, std::string("WeightedSum needs ") + name);
        } else if (*value <= 0) {
          error(FindingCode::NonPositiveWeight, std::string(name) + " = " + value->to_string());
        }
      }
      break;
    default: break;
  }
  return report;
}

Instance make_instance(std::span<const std::pair<Int, Int>> jobs, Variant variant) {
  Instance instance;
  instance.variant = std::move(variant);
  int id = 0;
  for (auto [p, d] : jobs) instance.jobs.push_back({id++, p, d, {}});
  return instance;
}

Instance make_instance(std::initializer_list<std::pair<Int, Int>> jobs, Variant variant) {
  return make_instance(std::span<const std::pair<Int, Int>>(jobs.begin(), jobs.size()), std::move(variant));
}

}  // namespace bicrit
