#include "spt/classes/dag_order.hpp"

#include <stdexcept>

namespace spt {

std::vector<std::vector<char>> transitive_closure(const DagInstance& inst) {
    const int n = inst.n;
    BiOrientation o(n);
    for (auto [u, v] : inst.arcs) o.add_arc(u, v, Bucket::A);
    std::vector<int> order = topological_order(o);  // throws CycleError

    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    // sweep in reverse topological order: reach(u) = union of reach(succ)
    for (int idx = n - 1; idx >= 0; --idx) {
        int u = order[idx];
        for (int v = 0; v < n; ++v) {
            if (!o.has_arc(u, v)) continue;
            reach[u][v] = 1;
            for (int w = 0; w < n; ++w)
                if (reach[v][w]) reach[u][w] = 1;
        }
    }
    return reach;
}

std::pair<WeightedGraph, BiOrientation> incomparability_build(const DagInstance& inst) {
    auto reach = transitive_closure(inst);
    const int n = inst.n;
    WeightedGraph g(n);
    if (!inst.weights.empty()) {
        if (static_cast<int>(inst.weights.size()) != n)
            throw std::invalid_argument("weights size mismatch");
        g.weights = inst.weights;
    }
    BiOrientation o(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (reach[u][v])
                o.add_arc(u, v, Bucket::A);
            else if (reach[v][u])
                o.add_arc(v, u, Bucket::A);
            else
                g.add_edge(u, v);  // incomparable
        }
    }
    return {std::move(g), std::move(o)};
}

} // namespace spt
