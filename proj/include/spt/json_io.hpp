#pragma once

#include <json.hpp>

#include "spt/bench.hpp"
#include "spt/instances.hpp"
#include "spt/solver/chain.hpp"
#include "spt/solver/fuzz.hpp"
#include "spt/verifier.hpp"

// JSON wire formats. Canonical field order throughout (ordered_json), all
// vertex indices 0-based, all coordinates and weights integers:
//   graph        {"n", "edges": [[u,v],...], "weights": [w0,...]}
//   orientation  {"n", "arcs": [{"from","to","bucket":"A"|"B"},...]}
//   pair         {"graph", "orientation"}
//   report       {"<flag>": {"pass", "witness"?}, ...}
//   result       {"value", "members", "verified"}
//   instances    {"type": "...", ...} per class
namespace spt {

using Json = nlohmann::ordered_json;

Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

Json orientation_to_json(const BiOrientation& o);
BiOrientation orientation_from_json(const Json& j);

Json report_to_json(const VerifierReport& rep);

Json result_to_json(const ChainResult& res, bool verified);

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json fuzz_report_to_json(const FuzzReport& rep);
Json bench_to_json(const BenchResult& res, const std::string& workload);

// Graphviz rendering: graph edges without direction, bucket A arcs solid,
// bucket B arcs dashed.
std::string to_dot(const WeightedGraph& g, const BiOrientation& o);

} // namespace spt
