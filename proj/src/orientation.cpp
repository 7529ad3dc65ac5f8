#include "spt/orientation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace spt {

CycleError::CycleError(std::vector<int> cycle)
    : std::runtime_error("cycle detected"), cycle_(std::move(cycle)) {}

BiOrientation::BiOrientation(int vertex_count)
    : n(vertex_count), code(static_cast<size_t>(vertex_count) * vertex_count, 0) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void BiOrientation::add_arc(int from, int to, Bucket b) {
    if (from < 0 || to < 0 || from >= n || to >= n) throw std::invalid_argument("vertex out of range");
    if (from == to) throw std::invalid_argument("self arc");
    arcs.push_back(Arc{from, to, b});
    char& slot = code[static_cast<size_t>(from) * n + to];
    if (slot == 0) slot = (b == Bucket::A) ? 1 : 2;
}

namespace {

// Any vertex left over by Kahn has an in-neighbor among the leftovers; walk
// predecessors until a vertex repeats, then cut the loop out.
std::vector<int> find_cycle(const BiOrientation& o, const std::vector<char>& remaining) {
    int start = 0;
    while (!remaining[start]) ++start;

    std::vector<int> walk;
    std::vector<int> seen_at(o.n, -1);
    int cur = start;
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        for (int p = 0; p < o.n; ++p) {
            if (remaining[p] && o.has_arc(p, cur)) {
                cur = p;
                break;
            }
        }
    }
    std::vector<int> cycle(walk.begin() + seen_at[cur], walk.end());
    std::reverse(cycle.begin(), cycle.end());  // arc direction
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    return cycle;
}

} // namespace

std::vector<int> topological_order(const BiOrientation& o) {
    std::vector<int> indeg(o.n, 0);
    for (int u = 0; u < o.n; ++u)
        for (int v = 0; v < o.n; ++v)
            if (o.has_arc(u, v)) ++indeg[v];

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < o.n; ++v)
        if (indeg[v] == 0) ready.push(v);

    std::vector<int> order;
    order.reserve(o.n);
    std::vector<char> remaining(o.n, 1);
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        remaining[u] = 0;
        for (int v = 0; v < o.n; ++v)
            if (o.has_arc(u, v) && --indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != o.n) throw CycleError(find_cycle(o, remaining));
    return order;
}

} // namespace spt
