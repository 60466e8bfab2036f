// bicrit: generate source problems, build gadget instances, solve, verify.
//
// Exit codes: 0 ok, 2 bad input, 3 infeasible, 4 budget exceeded,
// 5 verification failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicrit/exact.hpp"
#include "bicrit/io.hpp"
#include "bicrit/lemma_lab.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/source.hpp"

using namespace bicrit;
using bicrit::io::json;

namespace {

enum Exit { kOk = 0, kBadInput = 2, kInfeasible = 3, kBudget = 4, kVerifyFailed = 5 };

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw BadInput("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

json read_json(const std::string& path) { return io::parse(read_text(path)); }

std::vector<Int> parse_values(const std::string& text) {
  std::vector<Int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(Int::parse(item));
  return out;
}

struct Common {
  std::uint64_t seed = 1;
  Budget budget;
  std::string in = "-";
  std::string out = "-";
  std::string manifest;
};

struct GenSourceOpts {
  std::string kind = "partition";
  int n = 6;
  int m = 2;
  std::int64_t max_value = 12;
  bool random = false;
  std::string values;
  std::string solution;
};

struct ReduceOpts {
  std::string kind = "strong";
  bool strict = false;
  std::string ell;
  std::string weight = "1";
};

struct SolveOpts {
  std::string variant = "instance";
  std::string ell;
  std::string k;
  std::string w1 = "1";
  std::string w2 = "1";
  bool brute_force = false;
};

struct VerifyOpts {
  std::string suite = "identities";
  int samples = 1000;
  std::string solution;
};

// ---- gen-source ---------------------------------------------------------

int cmd_gen_source(const Common& c, const GenSourceOpts& o, json& summary) {
  Rng rng(c.seed);
  json body, sidecar;
  if (o.kind == "threepartition") {
    ThreePartitionSource src;
    if (!o.values.empty()) {
      src.a = parse_values(o.values);
      src.m = o.m;
      if (src.m < 1) throw BadInput("m must be positive");
    } else {
      if (o.n < o.m || o.m < 1 || o.max_value < 1) throw BadInput("need n >= m >= 1 and a positive value range");
      src = o.random ? random_three_partition(o.n, o.m, o.max_value, rng)
                     : planted_three_partition(o.n, o.m, o.max_value, rng);
    }
    Int total = 0;
    for (auto v : src.a) total += v;
    if (total % Int(src.m) != 0) throw BadInput("m = " + std::to_string(src.m) + " does not divide sum(a)");
    body = io::to_json(src);
    body["t"] = io::to_json(total / Int(src.m));
    sidecar = io::solution_to_json(src);
  } else if (o.kind == "partition") {
    PartitionSource src;
    if (!o.values.empty()) {
      src.a = parse_values(o.values);
    } else {
      if (o.n < 1 || o.max_value < 1) throw BadInput("need n >= 1 and a positive value range");
      if (!o.random && o.n < 2) throw BadInput("a planted partition needs n >= 2");
      src = o.random ? random_partition(o.n, o.max_value, rng) : planted_partition(o.n, o.max_value, rng);
    }
    Int total = 0;
    for (auto v : src.a) total += v;
    if (total % 2 != 0) throw BadInput("sum(a) is odd");
    body = io::to_json(src);
    body["t"] = io::to_json(total / 2);
    sidecar = io::solution_to_json(src);
  } else {
    throw BadInput("unknown source kind " + o.kind);
  }
  write_json(c.out, body);
  if (!o.solution.empty()) write_json(o.solution, sidecar);
  summary = {{"kind", o.kind}, {"n", body["a"].size()}, {"planted", !sidecar["solution"].is_null()}};
  return kOk;
}

// ---- reduce ---------------------------------------------------------------

int cmd_reduce(const Common& c, const ReduceOpts& o, json& summary) {
  const json input = read_json(c.in);
  Instance inst;
  if (o.kind == "strong" || o.kind == "weak") {
    const io::SourceFile src = io::source_from_json(input);
    if (o.kind == "strong") {
      if (src.kind != "threepartition") throw BadInput("strong reduction needs a threepartition source");
      inst = gen_strong(src.a, src.m, o.strict);
    } else {
      inst = gen_weak(src.a);
    }
  } else if (o.kind == "lexgadget") {
    if (o.ell.empty()) throw BadInput("lexgadget needs --ell");
    inst = gen_lex_gadget(io::instance_from_json(input), Int::parse(o.ell));
  } else if (o.kind == "apriori") {
    inst = gen_apriori_scaled(io::instance_from_json(input), Int::parse(o.weight));
  } else {
    throw BadInput("unknown reduction " + o.kind);
  }
  write_json(c.out, io::to_json(inst));
  summary = {{"kind", o.kind}, {"jobs", inst.size()}, {"variant", io::to_json(inst.variant)}};
  std::cerr << o.kind << ": " << inst.size() << " jobs";
  if (inst.variant.ell) std::cerr << ", ell = " << *inst.variant.ell;
  if (inst.variant.k) std::cerr << ", k = " << *inst.variant.k;
  std::cerr << "\n";
  return kOk;
}

// ---- solve ----------------------------------------------------------------

Variant pick_variant(const Instance& inst, const SolveOpts& o) {
  const std::string& v = o.variant;
  auto need = [&](const std::string& value, Int fallback_present, bool has_fallback, const char* name) {
    if (!value.empty()) return Int::parse(value);
    if (has_fallback) return fallback_present;
    throw BadInput(std::string("variant ") + v + " needs --" + name);
  };
  if (v == "instance") {
    if (inst.variant.kind == VariantKind::None) throw BadInput("instance has no variant; pass --variant");
    return inst.variant;
  }
  const Int ell_fb = inst.variant.ell.value_or(Int(0));
  const Int k_fb = inst.variant.k.value_or(Int(0));
  if (v == "constraint") return Variant::constraint_opt(need(o.ell, ell_fb, inst.variant.ell.has_value(), "ell"));
  if (v == "decision")
    return Variant::constraint_decision(need(o.ell, ell_fb, inst.variant.ell.has_value(), "ell"),
                                        need(o.k, k_fb, inst.variant.k.has_value(), "k"));
  if (v == "lex-tu") return Variant::lex_tmax_then_u();
  if (v == "lex-ut") return Variant::lex_u_then_tmax();
  if (v == "weighted") return Variant::weighted_sum(Int::parse(o.w1), Int::parse(o.w2));
  throw BadInput("unknown variant " + v);
}

int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return kOk;
    case SolveStatus::Infeasible: return kInfeasible;
    case SolveStatus::BudgetExceeded: return kBudget;
  }
  return kOk;
}

int cmd_solve(const Common& c, const SolveOpts& o, json& summary) {
  const Instance inst = io::instance_from_json(read_json(c.in));
  const auto report = validate_instance(inst);
  if (!report.ok()) throw BadInput("invalid instance: " + io::to_json(report).dump());
  const Variant variant = pick_variant(inst, o);
  json out;
  int code;
  if (variant.kind == VariantKind::ConstraintDecision && !o.brute_force) {
    const auto r = decision_constraint(inst, *variant.ell, *variant.k, c.budget);
    out = io::to_json(r);
    code = r.status == SolveStatus::BudgetExceeded ? kBudget : (r.answer ? kOk : kInfeasible);
  } else {
    const auto r = o.brute_force ? brute_force_permutations(inst, variant, c.budget) : solve(inst, variant, c.budget);
    out = io::to_json(r);
    code = exit_for(r.status);
  }
  out["variant"] = io::to_json(variant);
  write_json(c.out, out);
  summary = {{"status", out["status"]}, {"explored", out["explored"]}};
  if (out.contains("num_tardy")) summary["num_tardy"] = out["num_tardy"];
  if (out.contains("tmax")) summary["tmax"] = out["tmax"];
  if (out.contains("answer")) summary["answer"] = out["answer"];
  return code;
}

// ---- verify ---------------------------------------------------------------

json verify_identities(const Instance& inst, int& code) {
  const auto r = check_strong_identities(inst);
  if (!r.empty()) code = kVerifyFailed;
  return io::to_json(r);
}

json verify_lemmas(const Instance& inst, const Common& c, int samples, int& code) {
  Rng rng(c.seed);
  DiscrepancyReport total;
  if (const auto* sm = std::get_if<StrongMeta>(&inst.meta)) {
    for (int s = 0; s < samples; ++s) total.merge(compare_strong(inst, random_strong_candidate(sm->n, sm->m, rng)));
  } else if (const auto* wm = std::get_if<WeakMeta>(&inst.meta)) {
    // Draw until `samples` candidates satisfy the hypotheses (bounded attempts).
    const std::uint64_t cap = 100ULL * static_cast<std::uint64_t>(samples) + 100;
    for (std::uint64_t tries = 0; total.candidates < static_cast<std::uint64_t>(samples) && tries < cap; ++tries)
      total.merge(compare_weak(inst, random_weak_candidate(wm->n, rng)));
  } else {
    throw BadInput("lemmas suite needs a strong3p or weakpart instance");
  }
  if (!total.empty()) code = kVerifyFailed;
  return io::to_json(total);
}

json verify_sweep(const Instance& inst, const Common& c, int& code) {
  json out;
  if (const auto* sm = std::get_if<StrongMeta>(&inst.meta)) {
    const auto s = sweep_strong(inst, c.budget);
    out = io::to_json(s);
    out["k"] = io::to_json(sm->k);
    out["achievable"] = s.witness.has_value();
    if (s.status == SolveStatus::BudgetExceeded) code = kBudget;
    if (s.witness) {
      const auto back = strong_extract_partition(*sm, *s.witness);
      const bool valid = std::holds_alternative<std::vector<IndexSet>>(back) &&
                         is_three_partition_solution(sm->a, sm->m, std::get<std::vector<IndexSet>>(back));
      out["witness_valid"] = valid;
      if (valid) out["solution"] = std::get<std::vector<IndexSet>>(back);
      if (!valid) code = kVerifyFailed;
    }
  } else if (const auto* wm = std::get_if<WeakMeta>(&inst.meta)) {
    const auto s = sweep_weak(inst, c.budget);
    out = io::to_json(s);
    out["k"] = io::to_json(wm->k);
    if (s.status == SolveStatus::BudgetExceeded) code = kBudget;
    if (s.witness) {
      const auto back = weak_extract_subset(*wm, *s.witness);
      const bool valid = std::holds_alternative<IndexSet>(back) && is_partition_solution(wm->a, std::get<IndexSet>(back));
      out["witness_valid"] = valid;
      if (valid) out["solution"] = std::get<IndexSet>(back);
      if (!valid) code = kVerifyFailed;
    }
  } else {
    throw BadInput("sweep suite needs a strong3p or weakpart instance");
  }
  return out;
}

json verify_roundtrip(const Instance& inst, const std::string& text, const VerifyOpts& o, int& code) {
  json out;
  const std::string once = io::to_json(inst).dump();
  const std::string twice = io::to_json(io::instance_from_json(io::parse(once))).dump();
  out["json_stable"] = once == twice && io::to_json(io::instance_from_json(io::parse(text))).dump() == once;
  if (!out["json_stable"].get<bool>()) code = kVerifyFailed;

  const json sidecar = o.solution.empty() ? json(nullptr) : read_json(o.solution).at("solution");
  if (const auto* sm = std::get_if<StrongMeta>(&inst.meta)) {
    std::optional<std::vector<IndexSet>> groups;
    if (!sidecar.is_null()) groups = sidecar.get<std::vector<IndexSet>>();
    else groups = solve_three_partition(sm->a, sm->m);
    out["source_answer"] = groups.has_value();
    if (groups) {
      const auto cand = strong_candidate_from_partition(*sm, *groups);
      const auto ev = evaluate(inst, strong_candidate_schedule(inst, cand));
      const auto back = strong_extract_partition(*sm, cand);
      const bool ok = ev.tmax <= sm->ell && Int(ev.num_tardy) == sm->k &&
                      std::holds_alternative<std::vector<IndexSet>>(back) &&
                      is_three_partition_solution(sm->a, sm->m, std::get<std::vector<IndexSet>>(back));
      out["mapped"] = {{"tmax", io::to_json(ev.tmax)}, {"num_tardy", ev.num_tardy}, {"ok", ok}};
      if (!ok) code = kVerifyFailed;
    }
  } else if (const auto* wm = std::get_if<WeakMeta>(&inst.meta)) {
    std::optional<IndexSet> s;
    if (!sidecar.is_null()) s = sidecar.get<IndexSet>();
    else s = solve_partition(wm->a);
    out["source_answer"] = s.has_value();
    if (s) {
      const auto cand = weak_candidate_from_subset(*wm, *s);
      const auto ev = evaluate(inst, weak_candidate_schedule(inst, cand));
      const auto back = weak_extract_subset(*wm, cand);
      const bool ok = ev.tmax <= wm->ell && Int(ev.num_tardy) == wm->k && std::holds_alternative<IndexSet>(back) &&
                      std::get<IndexSet>(back) == *s;
      out["mapped"] = {{"tmax", io::to_json(ev.tmax)}, {"num_tardy", ev.num_tardy}, {"ok", ok}};
      if (!ok) code = kVerifyFailed;
    }
  }
  return out;
}

int cmd_verify(const Common& c, const VerifyOpts& o, json& summary) {
  const std::string text = read_text(c.in);
  const Instance inst = io::instance_from_json(io::parse(text));
  int code = kOk;
  json report;
  if (o.suite == "identities") {
    report = verify_identities(inst, code);
  } else if (o.suite == "lemmas") {
    if (o.samples < 1) throw BadInput("--samples must be positive");
    report = verify_lemmas(inst, c, o.samples, code);
  } else if (o.suite == "sweep") {
    report = verify_sweep(inst, c, code);
  } else if (o.suite == "roundtrip") {
    report = verify_roundtrip(inst, text, o, code);
  } else {
    throw BadInput("unknown suite " + o.suite);
  }
  report["suite"] = o.suite;
  report["passed"] = code == kOk;
  write_json(c.out, report);
  summary = {{"suite", o.suite}, {"passed", code == kOk}};
  if (report.contains("counts")) summary["counts"] = report["counts"];
  if (report.contains("achievable")) summary["achievable"] = report["achievable"];
  return code;
}

void add_common(CLI::App* sub, Common& c, bool input, bool budgets) {
  if (input) sub->add_option("-i,--in", c.in, "Input file, - for stdin")->capture_default_str();
  sub->add_option("-o,--out", c.out, "Output file, - for stdout")->capture_default_str();
  sub->add_option("--seed", c.seed, "Seed of the " + std::string(Rng::kAlgorithm) + " generator")->capture_default_str();
  sub->add_option("--manifest", c.manifest, "Write a run manifest JSON here");
  if (budgets) {
    sub->add_option("--budget-subsets", c.budget.max_subsets, "Cap on enumerated early sets")->capture_default_str();
    sub->add_option("--budget-perms", c.budget.max_perms, "Cap on enumerated permutations")->capture_default_str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-machine bicriteria scheduling toolkit"};
  app.require_subcommand(1);
  Common common;
  GenSourceOpts gen;
  ReduceOpts red;
  SolveOpts sol;
  VerifyOpts ver;

  auto* g = app.add_subcommand("gen-source", "Generate a 3-Partition or Partition source instance");
  add_common(g, common, false, false);
  g->add_option("--kind", gen.kind, "threepartition or partition")
      ->check(CLI::IsMember({"threepartition", "partition"}))
      ->capture_default_str();
  g->add_option("-n,--n", gen.n, "Number of values")->capture_default_str();
  g->add_option("-m,--m", gen.m, "Number of groups (threepartition)")->capture_default_str();
  g->add_option("--max-value", gen.max_value, "Values are drawn from [1, max-value]")->capture_default_str();
  g->add_flag("--random", gen.random, "Draw values uniformly instead of planting a solution");
  g->add_option("--values", gen.values, "Explicit comma-separated values instead of generation");
  g->add_option("--solution", gen.solution, "Write the planted solution sidecar here");

  auto* r = app.add_subcommand("reduce", "Build a gadget instance");
  add_common(r, common, true, false);
  r->add_option("--kind", red.kind, "strong, weak, lexgadget or apriori")
      ->check(CLI::IsMember({"strong", "weak", "lexgadget", "apriori"}))
      ->capture_default_str();
  r->add_flag("--strict-3partition", red.strict, "Require n = 3m");
  r->add_option("--ell", red.ell, "Tardiness bound (lexgadget)");
  r->add_option("--weight", red.weight, "Integer weight (apriori)")->capture_default_str();

  auto* s = app.add_subcommand("solve", "Solve an instance exactly");
  add_common(s, common, true, true);
  s->add_option("--variant", sol.variant, "instance, constraint, decision, lex-tu, lex-ut or weighted")
      ->check(CLI::IsMember({"instance", "constraint", "decision", "lex-tu", "lex-ut", "weighted"}))
      ->capture_default_str();
  s->add_option("--ell", sol.ell, "Tardiness bound (defaults to the instance's)");
  s->add_option("--k", sol.k, "Tardy-job bound for decision (defaults to the instance's)");
  s->add_option("--w1", sol.w1, "Weight of Tmax")->capture_default_str();
  s->add_option("--w2", sol.w2, "Weight of the tardy count")->capture_default_str();
  s->add_flag("--brute-force", sol.brute_force, "Enumerate permutations instead of early sets");

  auto* v = app.add_subcommand("verify", "Run a verification suite on a gadget instance");
  add_common(v, common, true, true);
  v->add_option("--suite", ver.suite, "identities, lemmas, sweep or roundtrip")
      ->check(CLI::IsMember({"identities", "lemmas", "sweep", "roundtrip"}))
      ->capture_default_str();
  v->add_option("--samples", ver.samples, "Random candidates for the lemmas suite")->capture_default_str();
  v->add_option("--solution", ver.solution, "Solution sidecar for the roundtrip suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  json summary;
  int code = kOk;
  std::string error;
  try {
    if (g->parsed()) code = cmd_gen_source(common, gen, summary);
    else if (r->parsed()) code = cmd_reduce(common, red, summary);
    else if (s->parsed()) code = cmd_solve(common, sol, summary);
    else code = cmd_verify(common, ver, summary);
  } catch (const BadInput& e) {
    error = e.what();
  } catch (const ParseError& e) {
    error = e.what();
  } catch (const json::exception& e) {
    error = e.what();
  } catch (const std::invalid_argument& e) {  // precondition, divisibility, parity
    error = e.what();
  } catch (const std::out_of_range& e) {
    error = e.what();
  } catch (const OverflowError& e) {
    error = e.what();
  }
  if (!error.empty()) {
    std::cerr << "error: " << error << "\n";
    code = kBadInput;
  }

  if (!common.manifest.empty()) {
    std::string line;
    for (int a = 0; a < argc; ++a) line += (a ? " " : "") + std::string(argv[a]);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json manifest = {{"command", line},
                     {"seed", common.seed},
                     {"prng", std::string(Rng::kAlgorithm)},
                     {"budgets", {{"subsets", common.budget.max_subsets}, {"perms", common.budget.max_perms}}},
                     {"input", common.in},
                     {"output", common.out},
                     {"wall_time_s", secs},
                     {"exit_code", code},
                     {"result", error.empty() ? summary : json{{"error", error}}}};
    try {
      write_json(common.manifest, manifest);
    } catch (const BadInput& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kBadInput;
    }
  }
  return code;
}
