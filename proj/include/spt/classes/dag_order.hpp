#pragma once

#include <utility>
#include <vector>

#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// A partial order given by an acyclic arc set.
struct DagInstance {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<Weight> weights;
};

// Reachability pairs (u, v), u != v, as bitset rows. Throws CycleError.
std::vector<std::vector<char>> transitive_closure(const DagInstance& inst);

// Graph: pairs incomparable under the order. Orientation: every comparable
// pair u -> v (u reaches v) as an A arc; bucket B stays empty.
std::pair<WeightedGraph, BiOrientation> incomparability_build(const DagInstance& inst);

} // namespace spt
