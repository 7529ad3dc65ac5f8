#include "spt/chordal/subtrees.hpp"

#include <algorithm>

#include "spt/errors.hpp"

namespace spt {

int HostTree::root() const {
    for (int v = 0; v < size(); ++v)
        if (parent[v] < 0) return v;
    return -1;
}

namespace {

struct HostLayout {
    std::vector<int> depth;
    std::vector<int> tin;   // pre-order, embedding order
    std::vector<int> tout;  // last pre-order time in the subtree
};

HostLayout layout(const HostTree& t) {
    const int n = t.size();
    HostLayout hl;
    hl.depth.assign(n, -1);
    hl.tin.assign(n, -1);
    hl.tout.assign(n, -1);
    int clock = 0;
    // iterative pre-order respecting the embedding order of children
    std::vector<std::pair<int, size_t>> stack;
    int r = t.root();
    hl.depth[r] = 0;
    hl.tin[r] = clock++;
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
        auto& [v, ci] = stack.back();
        if (ci == t.children[v].size()) {
            hl.tout[v] = clock - 1;
            stack.pop_back();
            continue;
        }
        int c = t.children[v][ci++];
        hl.depth[c] = hl.depth[v] + 1;
        hl.tin[c] = clock++;
        stack.emplace_back(c, 0);
    }
    return hl;
}

bool tree_consistent(const HostTree& t) {
    const int n = t.size();
    if (static_cast<int>(t.children.size()) != n) return false;
    int roots = 0;
    std::vector<int> child_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (t.parent[v] < 0) {
            ++roots;
            continue;
        }
        if (t.parent[v] >= n) return false;
    }
    if (roots != 1) return false;
    int listed = 0;
    for (int v = 0; v < n; ++v) {
        for (int c : t.children[v]) {
            if (c < 0 || c >= n || t.parent[c] != v || child_of[c] >= 0) return false;
            child_of[c] = v;
            ++listed;
        }
    }
    return listed == n - 1;
}

} // namespace

ClassValidity subtree_validate(const SubtreeInstance& inst) {
    if (!tree_consistent(inst.tree)) return {false, "malformed host tree", {}};
    HostLayout hl = layout(inst.tree);
    const int hn = inst.tree.size();
    for (int v = 0; v < hn; ++v)
        if (hl.tin[v] < 0) return {false, "host tree not connected", {}};

    for (int i = 0; i < static_cast<int>(inst.subtrees.size()); ++i) {
        const auto& sub = inst.subtrees[i];
        if (sub.empty()) return {false, "empty subtree", {i}};
        std::vector<char> in_set(hn, 0);
        for (int v : sub) {
            if (v < 0 || v >= hn) return {false, "subtree vertex out of range", {i}};
            in_set[v] = 1;
        }
        // connected within the host tree: every vertex except the shallowest
        // one must have its host parent in the set
        int min_depth = hn + 1, min_count = 0, top = -1;
        for (int v : sub) {
            if (hl.depth[v] < min_depth) {
                min_depth = hl.depth[v];
                min_count = 1;
                top = v;
            } else if (hl.depth[v] == min_depth) {
                ++min_count;
            }
        }
        if (min_count != 1) return {false, "subtree not connected (no unique top)", {i}};
        for (int v : sub)
            if (v != top && !in_set[inst.tree.parent[v]])
                return {false, "subtree not connected", {i}};
    }
    return {};
}

WeightedGraph subtree_intersection_graph(const SubtreeInstance& inst) {
    const int n = static_cast<int>(inst.subtrees.size());
    const int hn = inst.tree.size();
    WeightedGraph g(n);
    if (!inst.weights.empty()) g.weights = inst.weights;
    std::vector<std::vector<char>> marks(n, std::vector<char>(hn, 0));
    for (int i = 0; i < n; ++i)
        for (int v : inst.subtrees[i]) marks[i][v] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool meet = false;
            for (int v = 0; v < hn && !meet; ++v) meet = marks[i][v] && marks[j][v];
            if (meet) g.add_edge(i, j);
        }
    return g;
}

std::pair<WeightedGraph, BiOrientation> chordal_subtree_build(const SubtreeInstance& inst) {
    ClassValidity v = subtree_validate(inst);
    if (!v.ok) throw InvalidInstanceError("invalid subtree instance: " + v.reason);

    HostLayout hl = layout(inst.tree);
    const int n = static_cast<int>(inst.subtrees.size());

    // root of each subtree: its unique minimum-depth vertex
    std::vector<int> sub_root(n);
    for (int i = 0; i < n; ++i) {
        int best = inst.subtrees[i][0];
        for (int u : inst.subtrees[i])
            if (hl.depth[u] < hl.depth[best]) best = u;
        sub_root[i] = best;
    }
    auto is_ancestor = [&](int x, int y) { return hl.tin[x] <= hl.tin[y] && hl.tin[y] <= hl.tout[x]; };

    WeightedGraph g = subtree_intersection_graph(inst);
    BiOrientation o(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.edge(i, j)) continue;
            int ri = sub_root[i], rj = sub_root[j];
            // disjoint subtrees cannot share their roots
            if (is_ancestor(ri, rj))
                o.add_arc(i, j, Bucket::B);
            else if (is_ancestor(rj, ri))
                o.add_arc(j, i, Bucket::B);
            else if (hl.tin[ri] < hl.tin[rj])
                o.add_arc(i, j, Bucket::A);
            else
                o.add_arc(j, i, Bucket::A);
        }
    }
    return {std::move(g), std::move(o)};
}

} // namespace spt
