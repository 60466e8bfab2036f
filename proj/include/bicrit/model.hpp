#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bicrit/integer.hpp"

namespace bicrit {

// Structural role of a job inside a reduction gadget. Plain jobs carry no role.
enum class TagKind {
  Plain,
  NumberStar,     // J*_{i,j}
  NegNumberStar,  // ~J*_{i,j}
  Number,         // J_{i,j}
  NegNumber,      // ~J_{i,j}
  DelimiterStar,  // D*_j
  Delimiter,      // D_j
  FillerZero,     // F_0
  FillerFirst,    // F^1_i
  FillerLast,     // F^m_i
  WeakStar,       // J*_i
  WeakNegStar,    // ~J*_i
  WeakMain,       // J_i
  WeakNegMain,    // ~J_i
  WeakFiller,     // one member of the filler group F_i
  GadgetStar,     // the extra job J* of the lexicographic gadget
};
inline constexpr int kTagKindCount = 16;

std::string_view to_string(TagKind kind);
std::optional<TagKind> tag_kind_from_string(std::string_view name);

// Indices are 1-based, as in the gadget job names; unused indices are 0.
struct Tag {
  TagKind kind = TagKind::Plain;
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Tag&, const Tag&) = default;
};

// Human-readable job name such as "J*_{2,1}", "~J_{3}", "F^1_{4}" or "D*_{2}".
std::string label(const Tag& tag);

struct Job {
  int id = 0;
  Int proc;
  Int due;
  Tag tag;
};

enum class VariantKind { None, ConstraintDecision, ConstraintOpt, LexTmaxThenU, LexUThenTmax, WeightedSum };

std::string_view to_string(VariantKind kind);
std::optional<VariantKind> variant_kind_from_string(std::string_view name);

// Problem variant attached to an instance. Only the parameters relevant to
// `kind` are meaningful: ell (ConstraintDecision, ConstraintOpt), k
// (ConstraintDecision), w1/w2 (WeightedSum, minimizing w1*Tmax + w2*sum U).
struct Variant {
  VariantKind kind = VariantKind::None;
  std::optional<Int> ell;
  std::optional<Int> k;
  std::optional<Int> w1;
  std::optional<Int> w2;

  static Variant none() { return {}; }
  static Variant constraint_decision(Int ell, Int k) { return {VariantKind::ConstraintDecision, ell, k, {}, {}}; }
  static Variant constraint_opt(Int ell) { return {VariantKind::ConstraintOpt, ell, {}, {}, {}}; }
  static Variant lex_tmax_then_u() { return {VariantKind::LexTmaxThenU, {}, {}, {}, {}}; }
  static Variant lex_u_then_tmax() { return {VariantKind::LexUThenTmax, {}, {}, {}, {}}; }
  static Variant weighted_sum(Int w1, Int w2) { return {VariantKind::WeightedSum, {}, {}, w1, w2}; }

  friend bool operator==(const Variant&, const Variant&) = default;
};

// Metadata of the strongly NP-hard 3-Partition gadget.
struct StrongMeta {
  std::vector<Int> a;
  int n = 0;
  int m = 0;
  Int t;
  Int alpha;
  Int delta;
  std::vector<Int> delta_star;  // delta_star[j-1] for j = 1..m+1
  std::vector<Int> Delta;       // Delta[j] for j = 0..m
  std::vector<Int> Delta_star;  // Delta_star[j-1] for j = 1..m+1
  Int k;
  Int ell;
  bool strict = false;          // n == 3m was enforced at generation
  std::map<Tag, int> job_index;

  friend bool operator==(const StrongMeta&, const StrongMeta&) = default;
};

// Metadata of the weakly NP-hard Partition gadget.
struct WeakMeta {
  std::vector<Int> a;
  int n = 0;
  Int t;
  Int Z;
  Int Y;
  Int X;
  Int W;
  Int D1_star;
  Int filler_multiplicity;  // 2W/X jobs per filler group
  Int k;
  Int ell;
  std::map<Tag, int> job_index;  // fillers are indexed by their group only via filler_ids
  std::vector<std::vector<int>> filler_ids;  // filler_ids[i-1]: ids of group F_i

  friend bool operator==(const WeakMeta&, const WeakMeta&) = default;
};

struct LexGadgetMeta {
  Int ell;
  Int total_proc;  // P, the processing time of the source instance
  int star_id = 0;

  friend bool operator==(const LexGadgetMeta&, const LexGadgetMeta&) = default;
};

struct AprioriMeta {
  Int weight;
  Int factor;  // 2 * n * weight

  friend bool operator==(const AprioriMeta&, const AprioriMeta&) = default;
};

using Meta = std::variant<std::monostate, StrongMeta, WeakMeta, LexGadgetMeta, AprioriMeta>;

struct Instance {
  std::vector<Job> jobs;
  Variant variant;
  Meta meta;

  std::size_t size() const { return jobs.size(); }
  Int total_proc() const;
  // Position of the job with the given id in `jobs`; throws std::out_of_range.
  std::size_t index_of(int id) const;
};

// order[k] is the id of the (k+1)-th processed job.
struct Schedule {
  std::vector<int> order;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Per-job vectors are aligned with Instance::jobs (not with the order).
struct Evaluation {
  std::vector<Int> completion;
  std::vector<Int> tardiness;
  Int tmax;
  int num_tardy = 0;
  std::vector<int> tardy_set;  // ids, ascending

  // C > d exactly when the tardiness is positive.
  bool is_tardy(std::size_t job_index) const { return tardiness[job_index] > 0; }

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

class PermutationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Completion times are prefix sums of processing times along the order; a job
// is tardy when it completes strictly after its due date.
Evaluation evaluate(const Instance& instance, const Schedule& schedule);

bool is_feasible_tmax(const Evaluation& evaluation, Int ell);

enum class Severity { Error, Warning };

enum class FindingCode {
  EmptyInstance,
  DuplicateId,
  NegativeId,
  NegativeProc,
  NegativeDue,
  MissingParameter,
  NegativeParameter,
  NonPositiveWeight,
  KExceedsJobCount,
};

std::string_view to_string(FindingCode code);

struct Finding {
  Severity severity;
  FindingCode code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const;  // no Error-severity findings
  bool empty() const { return findings.empty(); }
};

ValidationReport validate_instance(const Instance& instance);

// Builds an instance of plain jobs with ids 0..n-1 from (proc, due) pairs.
Instance make_instance(std::span<const std::pair<Int, Int>> jobs, Variant variant = Variant::none());
Instance make_instance(std::initializer_list<std::pair<Int, Int>> jobs, Variant variant = Variant::none());

}  // namespace bicrit
