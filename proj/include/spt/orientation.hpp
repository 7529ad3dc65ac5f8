#pragma once

#include <vector>

#include "spt/errors.hpp"

namespace spt {

enum class Bucket : char { A, B };

struct Arc {
    int from;
    int to;
    Bucket bucket;

    bool operator==(const Arc&) const = default;
};

// An orientation of vertex pairs partitioned into buckets A and B.
// The container accepts arbitrary arc lists, including ones that violate
// antisymmetry or acyclicity; verify_orientation decides whether they form
// a strongly pseudo transitive orientation. The raw arc list is kept so the
// verifier can spot duplicate or conflicting insertions coming from files.
struct BiOrientation {
    int n = 0;
    std::vector<Arc> arcs;   // insertion order
    std::vector<char> code;  // n*n: 0 none, 1 A, 2 B; first insertion wins

    BiOrientation() = default;
    explicit BiOrientation(int vertex_count);

    void add_arc(int from, int to, Bucket b);

    int arc_code(int from, int to) const { return code[static_cast<size_t>(from) * n + to]; }
    bool has_arc(int from, int to) const { return arc_code(from, to) != 0; }
    bool has(int from, int to, Bucket b) const {
        return arc_code(from, to) == (b == Bucket::A ? 1 : 2);
    }
    int arc_count() const { return static_cast<int>(arcs.size()); }
};

// Order in which every arc goes forward, smallest-index-first tie break.
// Throws CycleError carrying a witness cycle when the arc set is cyclic.
std::vector<int> topological_order(const BiOrientation& o);

} // namespace spt
