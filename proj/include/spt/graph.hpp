#pragma once

#include <utility>
#include <vector>

namespace spt {

using Weight = long long;

// Undirected simple graph with nonnegative integer vertex weights.
// Adjacency is a symmetric boolean matrix with an empty diagonal.
struct WeightedGraph {
    int n = 0;
    std::vector<char> adj;        // n*n, row-major
    std::vector<Weight> weights;  // size n, all >= 0

    WeightedGraph() = default;
    explicit WeightedGraph(int vertex_count, Weight default_weight = 1);

    bool edge(int u, int v) const { return adj[static_cast<size_t>(u) * n + v] != 0; }
    void add_edge(int u, int v);

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool operator==(const WeightedGraph&) const = default;
};

// Edge uv iff u != v and uv is not an edge of g; weights preserved.
WeightedGraph complement(const WeightedGraph& g);

} // namespace spt
