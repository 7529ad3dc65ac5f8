#pragma once

#include <vector>

#include "spt/graph.hpp"

namespace spt {

struct OracleResult {
    Weight value = 0;
    std::vector<int> members;  // ascending
};

// Exact maximum weighted independent set by branch and bound over bitmask
// adjacency. Deterministic. Throws TooLargeError for n > 30.
OracleResult oracle_mwis(const WeightedGraph& g);

} // namespace spt
