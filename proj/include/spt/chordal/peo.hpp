#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// Chordal graph together with a perfect elimination ordering: for each
// vertex, its neighbors later in the order form a clique.
struct PeoInstance {
    WeightedGraph graph;
    std::vector<int> order;
};

// Maximum cardinality search; ties broken by smallest vertex index. The
// returned order is a PEO exactly when g is chordal.
std::vector<int> mcs_peo(const WeightedGraph& g);

struct PeoCheck {
    bool ok = true;
    std::vector<int> witness;  // (v, a, b): a and b later neighbors of v, ab not an edge
};

// Throws std::invalid_argument when order is not a permutation of 0..n-1.
PeoCheck peo_verify(const WeightedGraph& g, const std::vector<int>& order);

// Depth-first spanning forest that always descends to the unvisited
// neighbor of smallest PEO index, restarting at the smallest-index
// unvisited vertex when a component is exhausted.
struct CanonicalDfsTree {
    std::vector<int> parent;  // -1 for roots
    std::vector<int> disc;    // discovery rank, 0-based
};

CanonicalDfsTree canonical_dfs(const WeightedGraph& g, const std::vector<int>& order);

// Non-edges oriented from the earlier-discovered endpoint; bucket B when the
// endpoints sit on one branch of the guiding DFS tree (ancestor and
// descendant), bucket A across branches. The guiding tree is the canonical
// DFS of the REVERSED elimination order: rooted at the last-eliminated
// vertex, always descending toward earlier-eliminated ones. Running against
// the order as given breaks B transitivity (exhaustively checked on all
// chordal graphs with n <= 6); the reversed guide passes every axiom
// including first_type on the same census. Throws InvalidInstanceError when
// the order is not a PEO.
std::pair<WeightedGraph, BiOrientation> chordal_peo_build(const PeoInstance& inst);

// Witness for the branch composition property used by the B bucket: for
// vertices x, y, z on one branch of the guiding tree, taken in guide order,
// xy and yz non-edges force xz to be a non-edge. Returns such a triple with
// xz an edge when the property fails, empty otherwise. Exhaustive in the
// number of comparable triples.
std::vector<int> branch_transitivity_witness(const WeightedGraph& g,
                                             const std::vector<int>& order);

} // namespace spt
