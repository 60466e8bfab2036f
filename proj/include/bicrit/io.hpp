#pragma once

#include <string>

#include <json.hpp>

#include "bicrit/exact.hpp"
#include "bicrit/lemma_lab.hpp"
#include "bicrit/model.hpp"
#include "bicrit/reductions.hpp"
#include "bicrit/source.hpp"

// JSON encoding. Exact integers (p, d, a, ell, k, weights, gadget constants)
// are decimal strings; ids, indices and counters are JSON integers. Floats
// are rejected everywhere with ParseError.
namespace bicrit::io {

using nlohmann::json;

json to_json(Int v);
Int int_from_json(const json& j);  // decimal string or JSON integer

json to_json(const Instance& instance);
Instance instance_from_json(const json& j);

json to_json(const Variant& variant);
Variant variant_from_json(const json& j);

json to_json(const Schedule& schedule);

json to_json(const ThreePartitionSource& source);
json to_json(const PartitionSource& source);
// Solution sidecar of a planted source: {"solution": [[...], ...]} or {"solution": [...]}.
json solution_to_json(const ThreePartitionSource& source);
json solution_to_json(const PartitionSource& source);

struct SourceFile {
  std::string kind;  // "threepartition" or "partition"
  std::vector<Int> a;
  int m = 2;
};
SourceFile source_from_json(const json& j);

json to_json(const OptResult& result);
json to_json(const DecisionResult& result);
json to_json(const Evaluation& evaluation);

json to_json(const StrongCandidate& candidate);
json to_json(const WeakCandidate& candidate);
StrongCandidate strong_candidate_from_json(const json& j);
WeakCandidate weak_candidate_from_json(const json& j);

json to_json(const DiscrepancyReport& report);
json to_json(const StrongSweep& sweep);
json to_json(const WeakSweep& sweep);
json to_json(const ValidationReport& report);

json parse(const std::string& text);  // throws ParseError

}  // namespace bicrit::io
