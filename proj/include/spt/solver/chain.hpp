#pragma once

#include <vector>

#include "spt/graph.hpp"
#include "spt/orientation.hpp"
#include "spt/verifier.hpp"

namespace spt {

// How a member entered the optimal chain, with links sufficient to replay
// the choice: a root heads a block at the top level; a child heads a block
// nested under its parent through a B arc.
struct MemberTrace {
    enum class Role { Root, Child };
    int vertex = -1;
    Role role = Role::Root;
    int parent = -1;        // block parent for children, -1 for roots
    int prev_sibling = -1;  // previous child in the sibling chain, -1 if first
    int follower = -1;      // vertex right after this member's block, -1 for none
};

struct ChainResult {
    Weight value = 0;
    std::vector<int> members;  // ascending
    std::vector<MemberTrace> certificate;
};

// Maximum total weight over vertex sets pairwise adjacent in the arc set.
//
// Nesting recurrence: a block headed by u holds child blocks reached through
// B arcs, consecutive children linked by A arcs, and the vertex following
// the whole block must be an A successor of u. Top-level blocks chain
// through A arcs. Sibling chains under one parent are folded into per-parent
// prefix maxima, so one (head, follower) table entry costs O(deg_B) after an
// O(deg_B^2) pass per parent.
//
// Why this is exact on a valid orientation: every member of a block is
// B-dominated by its head (B transitivity down the nesting), and every
// member is A-adjacent to the block's follower (the follower is an A
// successor of the head, so a B arc from the head to a member plus a B arc
// from the member to the follower would force the head-follower arc into B
// by transitivity, contradicting disjointness; A adjacency then chains
// through sibling links). Pairwise adjacency of the whole assembly follows
// by composing these two facts with the A-then-anything axiom, and
// conversely every chain parses into this shape by cutting at the first A
// successor of each head, so the maximum is neither unsound nor missed.
//
// Preconditions (verified unless skip_verify): antisymmetry, acyclicity,
// bucket disjointness, a/b transitivity and the A-then-any composition
// axiom; throws PreconditionError carrying the report otherwise. Weights
// must be nonnegative, one per vertex. The returned member set is re-checked
// for pairwise adjacency unconditionally.
ChainResult max_weight_chain(const BiOrientation& o, const std::vector<Weight>& weights,
                             bool skip_verify = false);

// Maximum weighted independent set of g through an orientation whose arcs
// cover exactly the non-edges of g; members are re-checked for independence.
ChainResult mwis(const WeightedGraph& g, const BiOrientation& o, bool skip_verify = false);

} // namespace spt
