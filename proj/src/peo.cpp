#include "spt/chordal/peo.hpp"

#include <algorithm>
#include <stdexcept>

#include "spt/errors.hpp"

namespace spt {

std::vector<int> mcs_peo(const WeightedGraph& g) {
    const int n = g.n;
    std::vector<int> label(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || label[v] > label[best])) best = v;
        numbered[best] = 1;
        visit.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!numbered[u] && g.edge(best, u)) ++label[u];
    }
    // MCS visits a reverse elimination order
    std::reverse(visit.begin(), visit.end());
    return visit;
}

PeoCheck peo_verify(const WeightedGraph& g, const std::vector<int>& order) {
    const int n = g.n;
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order is not a permutation");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] >= 0) throw std::invalid_argument("order is not a permutation");
        pos[v] = i;
    }
    // Standard criterion: the earliest later neighbor u of v must dominate
    // all other later neighbors of v.
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int u = -1;
        for (int j = i + 1; j < n; ++j)
            if (g.edge(v, order[j])) {
                u = order[j];
                break;
            }
        if (u < 0) continue;
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v || !g.edge(v, w) || pos[w] <= pos[u]) continue;
            if (!g.edge(u, w)) return {false, {v, u, w}};
        }
    }
    return {};
}

CanonicalDfsTree canonical_dfs(const WeightedGraph& g, const std::vector<int>& order) {
    const int n = g.n;
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order is not a permutation");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] >= 0) throw std::invalid_argument("order is not a permutation");
        pos[v] = i;
    }

    CanonicalDfsTree t;
    t.parent.assign(n, -1);
    t.disc.assign(n, -1);
    int clock = 0;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        int root = order[i];
        if (t.disc[root] >= 0) continue;
        t.disc[root] = clock++;
        stack.assign(1, root);
        while (!stack.empty()) {
            int v = stack.back();
            int next = -1;
            for (int j = 0; j < n; ++j) {
                int u = order[j];
                if (t.disc[u] < 0 && g.edge(v, u)) {
                    next = u;
                    break;
                }
            }
            if (next < 0) {
                stack.pop_back();
                continue;
            }
            t.parent[next] = v;
            t.disc[next] = clock++;
            stack.push_back(next);
        }
    }
    return t;
}

namespace {

// last discovery rank inside each vertex's subtree; with disc this gives
// O(1) ancestor tests
std::vector<int> subtree_last_rank(const CanonicalDfsTree& t) {
    const int n = static_cast<int>(t.parent.size());
    std::vector<int> by_disc(n);
    for (int v = 0; v < n; ++v) by_disc[t.disc[v]] = v;
    std::vector<int> fin(n);
    for (int r = n - 1; r >= 0; --r) {
        int v = by_disc[r];
        fin[v] = t.disc[v];
        for (int u = 0; u < n; ++u)
            if (t.parent[u] == v) fin[v] = std::max(fin[v], fin[u]);
    }
    return fin;
}

std::vector<int> guide_order(const std::vector<int>& order) {
    return std::vector<int>(order.rbegin(), order.rend());
}

} // namespace

std::pair<WeightedGraph, BiOrientation> chordal_peo_build(const PeoInstance& inst) {
    const WeightedGraph& g = inst.graph;
    PeoCheck chk = peo_verify(g, inst.order);
    if (!chk.ok) throw InvalidInstanceError("order is not a perfect elimination ordering");

    CanonicalDfsTree t = canonical_dfs(g, guide_order(inst.order));
    const int n = g.n;
    std::vector<int> fin = subtree_last_rank(t);
    auto is_ancestor = [&](int x, int y) { return t.disc[x] <= t.disc[y] && t.disc[y] <= fin[x]; };

    BiOrientation o(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.edge(u, v)) continue;
            int x = t.disc[u] < t.disc[v] ? u : v;
            int y = x == u ? v : u;
            o.add_arc(x, y, is_ancestor(x, y) ? Bucket::B : Bucket::A);
        }
    }
    return {g, std::move(o)};
}

std::vector<int> branch_transitivity_witness(const WeightedGraph& g,
                                             const std::vector<int>& order) {
    const int n = g.n;
    std::vector<int> guide = guide_order(order);
    CanonicalDfsTree t = canonical_dfs(g, guide);
    std::vector<int> fin = subtree_last_rank(t);
    auto is_ancestor = [&](int x, int y) { return t.disc[x] <= t.disc[y] && t.disc[y] <= fin[x]; };
    auto comparable = [&](int x, int y) { return is_ancestor(x, y) || is_ancestor(y, x); };

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[guide[i]] = i;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (a == b || b == c || a == c) continue;
                if (!(pos[a] < pos[b] && pos[b] < pos[c])) continue;
                if (!comparable(a, b) || !comparable(b, c) || !comparable(a, c)) continue;
                if (!g.edge(a, b) && !g.edge(b, c) && g.edge(a, c)) return {a, b, c};
            }
    return {};
}

} // namespace spt
