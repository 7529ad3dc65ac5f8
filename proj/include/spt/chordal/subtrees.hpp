#pragma once

#include <utility>
#include <vector>

#include "spt/classes/rectangles.hpp"  // ClassValidity
#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// Rooted tree with an explicit planar embedding: children are ordered.
struct HostTree {
    std::vector<int> parent;                // -1 at the root
    std::vector<std::vector<int>> children; // embedding order

    int size() const { return static_cast<int>(parent.size()); }
    int root() const;
};

// Subtrees of a host tree; the intersection graph of connected subtrees of a
// tree is exactly a chordal graph.
struct SubtreeInstance {
    HostTree tree;
    std::vector<std::vector<int>> subtrees;  // host-vertex sets, each connected
    std::vector<Weight> weights;
};

ClassValidity subtree_validate(const SubtreeInstance& inst);

// Intersection graph only (edge iff the vertex sets meet), with weights.
WeightedGraph subtree_intersection_graph(const SubtreeInstance& inst);

// Each subtree's root is its unique vertex closest to the host root. For a
// disjoint pair: comparable roots give a B arc ancestor to descendant;
// incomparable roots give an A arc left to right in the embedding
// (pre-order time). Throws InvalidInstanceError on malformed input.
std::pair<WeightedGraph, BiOrientation> chordal_subtree_build(const SubtreeInstance& inst);

} // namespace spt
