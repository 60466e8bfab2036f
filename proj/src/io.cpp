#include "bicrit/io.hpp"

#include <limits>

namespace bicrit::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int small_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

json ints(const std::vector<Int>& xs) {
  json out = json::array();
  for (const Int& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<Int> ints_from(const json& j) {
  if (!j.is_array()) fail("expected an array of integers");
  std::vector<Int> out;
  for (const json& x : j) out.push_back(int_from_json(x));
  return out;
}

std::optional<Int> opt_from(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return int_from_json(*it);
}

json tag_json(const Tag& tag) { return {{"kind", std::string(to_string(tag.kind))}, {"i", tag.i}, {"j", tag.j}}; }

Tag tag_from(const json& j) {
  const std::string name = field(j, "kind").get<std::string>();
  auto kind = tag_kind_from_string(name);
  if (!kind) fail("unknown tag kind \"" + name + "\"");
  return {*kind, small_int(field(j, "i"), "tag index i"), small_int(field(j, "j"), "tag index j")};
}

json index_json(const std::map<Tag, int>& index) {
  json out = json::array();
  for (const auto& [tag, id] : index) {
    json e = tag_json(tag);
    e["id"] = id;
    out.push_back(std::move(e));
  }
  return out;
}

std::map<Tag, int> index_from(const json& j) {
  if (!j.is_array()) fail("job_index must be an array");
  std::map<Tag, int> out;
  for (const json& e : j) out.emplace(tag_from(e), small_int(field(e, "id"), "job id"));
  return out;
}

json meta_json(const Meta& meta) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, StrongMeta>) {
          return {{"kind", "strong3p"},      {"a", ints(m.a)},
                  {"n", m.n},                {"m", m.m},
                  {"t", to_json(m.t)},       {"alpha", to_json(m.alpha)},
                  {"delta", to_json(m.delta)}, {"delta_star", ints(m.delta_star)},
                  {"Delta", ints(m.Delta)},  {"Delta_star", ints(m.Delta_star)},
                  {"k", to_json(m.k)},       {"ell", to_json(m.ell)},
                  {"strict", m.strict},      {"job_index", index_json(m.job_index)}};
        } else if constexpr (std::is_same_v<T, WeakMeta>) {
          return {{"kind", "weakpart"},
                  {"a", ints(m.a)},
                  {"n", m.n},
                  {"t", to_json(m.t)},
                  {"Z", to_json(m.Z)},
                  {"Y", to_json(m.Y)},
                  {"X", to_json(m.X)},
                  {"W", to_json(m.W)},
                  {"D1_star", to_json(m.D1_star)},
                  {"filler_multiplicity", to_json(m.filler_multiplicity)},
                  {"k", to_json(m.k)},
                  {"ell", to_json(m.ell)},
                  {"job_index", index_json(m.job_index)},
                  {"filler_ids", m.filler_ids}};
        } else if constexpr (std::is_same_v<T, LexGadgetMeta>) {
          return {{"kind", "lexgadget"},
                  {"ell", to_json(m.ell)},
                  {"total_proc", to_json(m.total_proc)},
                  {"star_id", m.star_id}};
        } else {
          return {{"kind", "apriori"}, {"weight", to_json(m.weight)}, {"factor", to_json(m.factor)}};
        }
      },
      meta);
}

Meta meta_from(const json& j) {
  if (j.is_null()) return std::monostate{};
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "strong3p") {
    StrongMeta m;
    m.a = ints_from(field(j, "a"));
    m.n = small_int(field(j, "n"), "n");
    m.m = small_int(field(j, "m"), "m");
    m.t = int_from_json(field(j, "t"));
    m.alpha = int_from_json(field(j, "alpha"));
    m.delta = int_from_json(field(j, "delta"));
    m.delta_star = ints_from(field(j, "delta_star"));
    m.Delta = ints_from(field(j, "Delta"));
    m.Delta_star = ints_from(field(j, "Delta_star"));
    m.k = int_from_json(field(j, "k"));
    m.ell = int_from_json(field(j, "ell"));
    m.strict = field(j, "strict").get<bool>();
    m.job_index = index_from(field(j, "job_index"));
    if (static_cast<int>(m.a.size()) != m.n || static_cast<int>(m.Delta.size()) != m.m + 1 ||
        static_cast<int>(m.Delta_star.size()) != m.m + 1 || static_cast<int>(m.delta_star.size()) != m.m + 1)
      fail("strong3p metadata has inconsistent list lengths");
    return m;
  }
  if (kind == "weakpart") {
    WeakMeta m;
    m.a = ints_from(field(j, "a"));
    m.n = small_int(field(j, "n"), "n");
    m.t = int_from_json(field(j, "t"));
    m.Z = int_from_json(field(j, "Z"));
    m.Y = int_from_json(field(j, "Y"));
    m.X = int_from_json(field(j, "X"));
    m.W = int_from_json(field(j, "W"));
    m.D1_star = int_from_json(field(j, "D1_star"));
    m.filler_multiplicity = int_from_json(field(j, "filler_multiplicity"));
    m.k = int_from_json(field(j, "k"));
    m.ell = int_from_json(field(j, "ell"));
    m.job_index = index_from(field(j, "job_index"));
    for (const json& group : field(j, "filler_ids")) {
      std::vector<int> ids;
      for (const json& id : group) ids.push_back(small_int(id, "filler id"));
      m.filler_ids.push_back(std::move(ids));
    }
    if (static_cast<int>(m.a.size()) != m.n || static_cast<int>(m.filler_ids.size()) != m.n)
      fail("weakpart metadata has inconsistent list lengths");
    return m;
  }
  if (kind == "lexgadget")
    return LexGadgetMeta{int_from_json(field(j, "ell")), int_from_json(field(j, "total_proc")),
                         small_int(field(j, "star_id"), "star_id")};
  if (kind == "apriori") return AprioriMeta{int_from_json(field(j, "weight")), int_from_json(field(j, "factor"))};
  fail("unknown meta kind \"" + kind + "\"");
}

json choices_json(const std::vector<Choice>& cs) {
  json out = json::array();
  for (Choice c : cs) out.push_back(c == Choice::Pos ? "Pos" : "Neg");
  return out;
}

std::vector<Choice> choices_from(const json& j) {
  if (!j.is_array()) fail("choices must be an array");
  std::vector<Choice> out;
  for (const json& c : j) {
    if (c == "Pos") {
      out.push_back(Choice::Pos);
    } else if (c == "Neg") {
      out.push_back(Choice::Neg);
    } else {
      fail("choice must be \"Pos\" or \"Neg\"");
    }
  }
  return out;
}

}  // namespace

json to_json(Int v) { return v.to_string(); }

Int int_from_json(const json& j) {
  if (j.is_string()) return Int::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_number_float()) fail("floating-point value where an exact integer is required");
  fail("expected an integer (decimal string)");
}

json to_json(const Variant& v) {
  json out = {{"kind", std::string(to_string(v.kind))}};
  if (v.ell) out["ell"] = to_json(*v.ell);
  if (v.k) out["k"] = to_json(*v.k);
  if (v.w1) out["w1"] = to_json(*v.w1);
  if (v.w2) out["w2"] = to_json(*v.w2);
  return out;
}

Variant variant_from_json(const json& j) {
  if (j.is_null()) return {};
  const std::string name = field(j, "kind").get<std::string>();
  auto kind = variant_kind_from_string(name);
  if (!kind) fail("unknown variant \"" + name + "\"");
  return {*kind, opt_from(j, "ell"), opt_from(j, "k"), opt_from(j, "w1"), opt_from(j, "w2")};
}

json to_json(const Instance& instance) {
  json jobs = json::array();
  for (const Job& job : instance.jobs) {
    json e = {{"id", job.id}, {"p", to_json(job.proc)}, {"d", to_json(job.due)}};
    if (job.tag.kind != TagKind::Plain) e["tag"] = tag_json(job.tag);
    jobs.push_back(std::move(e));
  }
  return {{"jobs", std::move(jobs)}, {"variant", to_json(instance.variant)}, {"meta", meta_json(instance.meta)}};
}

Instance instance_from_json(const json& j) {
  Instance instance;
  const json& jobs = field(j, "jobs");
  if (!jobs.is_array()) fail("\"jobs\" must be an array");
  for (const json& e : jobs) {
    Job job;
    job.id = small_int(field(e, "id"), "job id");
    job.proc = int_from_json(field(e, "p"));
    job.due = int_from_json(field(e, "d"));
    if (auto it = e.find("tag"); it != e.end()) job.tag = tag_from(*it);
    instance.jobs.push_back(job);
  }
  if (auto it = j.find("variant"); it != j.end()) instance.variant = variant_from_json(*it);
  if (auto it = j.find("meta"); it != j.end()) instance.meta = meta_from(*it);
  return instance;
}

json to_json(const Schedule& schedule) { return schedule.order; }

json to_json(const ThreePartitionSource& source) {
  return {{"kind", "threepartition"}, {"a", ints(source.a)}, {"m", source.m}};
}

json to_json(const PartitionSource& source) { return {{"kind", "partition"}, {"a", ints(source.a)}}; }

json solution_to_json(const ThreePartitionSource& source) {
  return {{"solution", source.solution ? json(*source.solution) : json(nullptr)}};
}

json solution_to_json(const PartitionSource& source) {
  return {{"solution", source.solution ? json(*source.solution) : json(nullptr)}};
}

SourceFile source_from_json(const json& j) {
  SourceFile out;
  out.kind = field(j, "kind").get<std::string>();
  out.a = ints_from(field(j, "a"));
  if (out.kind == "threepartition") {
    out.m = small_int(field(j, "m"), "m");
  } else if (out.kind != "partition") {
    fail("unknown source kind \"" + out.kind + "\"");
  }
  return out;
}

json to_json(const OptResult& r) {
  json out = {{"status", std::string(to_string(r.status))}, {"explored", r.explored}};
  if (r.optimal()) {
    out["schedule"] = to_json(r.schedule);
    out["tmax"] = to_json(r.tmax);
    out["num_tardy"] = r.num_tardy;
    out["objective"] = ints(r.objective);
  }
  return out;
}

json to_json(const DecisionResult& r) {
  json out = {{"status", std::string(to_string(r.status))}, {"answer", r.answer}, {"explored", r.explored}};
  if (r.answer) out["witness"] = to_json(r.witness);
  return out;
}

json to_json(const Evaluation& ev) {
  return {{"completion", ints(ev.completion)},
          {"tardiness", ints(ev.tardiness)},
          {"tmax", to_json(ev.tmax)},
          {"num_tardy", ev.num_tardy},
          {"tardy_set", ev.tardy_set}};
}

json to_json(const StrongCandidate& c) {
  json star = json::array();
  json main = json::array();
  for (const auto& row : c.star) star.push_back(choices_json(row));
  for (const auto& row : c.main) main.push_back(choices_json(row));
  return {{"star", std::move(star)}, {"main", std::move(main)}};
}

json to_json(const WeakCandidate& c) { return {{"star", choices_json(c.star)}, {"main", choices_json(c.main)}}; }

StrongCandidate strong_candidate_from_json(const json& j) {
  StrongCandidate c;
  for (const json& row : field(j, "star")) c.star.push_back(choices_from(row));
  for (const json& row : field(j, "main")) c.main.push_back(choices_from(row));
  return c;
}

WeakCandidate weak_candidate_from_json(const json& j) {
  return {choices_from(field(j, "star")), choices_from(field(j, "main"))};
}

json to_json(const DiscrepancyReport& r) {
  json identities = json::array();
  for (const auto& f : r.identity_failures)
    identities.push_back({{"identity", f.identity}, {"j", f.j}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)},
                          {"relation", f.relation}});
  json mismatches = json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"id", m.id},
                          {"job", m.job},
                          {"predicted", std::string(to_string(m.predicted))},
                          {"actual", std::string(to_string(m.actual))},
                          {"rule", m.rule}});
  json feasibility = json::array();
  for (const auto& f : r.feasibility_mismatches)
    feasibility.push_back({{"predicted", f.predicted}, {"actual", f.actual}, {"tmax", to_json(f.tmax)}});
  return {{"identity_failures", std::move(identities)},
          {"mismatches", std::move(mismatches)},
          {"feasibility_mismatches", std::move(feasibility)},
          {"counts",
           {{"identities_checked", r.identities_checked},
            {"candidates", r.candidates},
            {"skipped", r.skipped},
            {"jobs_compared", r.jobs_compared},
            {"out_of_scope_disagreements", r.out_of_scope_disagreements}}}};
}

json to_json(const StrongSweep& s) {
  json out = {{"status", std::string(to_string(s.status))}, {"explored", s.explored}};
  out["best_tardy"] = s.best_tardy ? json(*s.best_tardy) : json(nullptr);
  out["witness"] = s.witness ? to_json(*s.witness) : json(nullptr);
  return out;
}

json to_json(const WeakSweep& s) {
  json out = {{"status", std::string(to_string(s.status))}, {"explored", s.explored}, {"achievable", s.achievable}};
  out["best_tardy"] = s.best_tardy ? json(*s.best_tardy) : json(nullptr);
  out["witness"] = s.witness ? to_json(*s.witness) : json(nullptr);
  return out;
}

json to_json(const ValidationReport& report) {
  json out = json::array();
  for (const Finding& f : report.findings)
    out.push_back({{"severity", f.severity == Severity::Error ? "error" : "warning"},
                   {"code", std::string(to_string(f.code))},
                   {"detail", f.detail}});
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace bicrit::io
