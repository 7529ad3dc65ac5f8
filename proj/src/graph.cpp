#include "spt/graph.hpp"

#include <stdexcept>

namespace spt {

WeightedGraph::WeightedGraph(int vertex_count, Weight default_weight)
    : n(vertex_count),
      adj(static_cast<size_t>(vertex_count) * vertex_count, 0),
      weights(vertex_count, default_weight) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (default_weight < 0) throw std::invalid_argument("negative weight");
}

void WeightedGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self loop");
    adj[static_cast<size_t>(u) * n + v] = 1;
    adj[static_cast<size_t>(v) * n + u] = 1;
}

int WeightedGraph::edge_count() const {
    int m = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) ++m;
    return m;
}

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) out.emplace_back(u, v);
    return out;
}

WeightedGraph complement(const WeightedGraph& g) {
    WeightedGraph c(g.n);
    c.weights = g.weights;
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            c.adj[static_cast<size_t>(u) * g.n + v] = (u != v && !g.edge(u, v)) ? 1 : 0;
    return c;
}

} // namespace spt
