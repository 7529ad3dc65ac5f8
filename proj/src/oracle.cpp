#include "spt/solver/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "spt/errors.hpp"

namespace spt {

namespace {

struct Search {
    int n;
    const std::vector<Weight>* weights;
    std::vector<std::uint64_t> nbr;
    Weight best_val = 0;
    int best_cnt = 0;
    std::uint64_t best_set = 0;

    void consider(Weight val, std::uint64_t set) {
        int cnt = __builtin_popcountll(set);
        if (val > best_val || (val == best_val && cnt < best_cnt)) {
            best_val = val;
            best_cnt = cnt;
            best_set = set;
        }
    }

    void go(std::uint64_t remaining, Weight acc, std::uint64_t chosen) {
        if (!remaining) {
            consider(acc, chosen);
            return;
        }
        Weight bound = acc;
        for (std::uint64_t m = remaining; m; m &= m - 1)
            bound += (*weights)[__builtin_ctzll(m)];
        if (bound < best_val) return;  // cannot even tie

        int v = __builtin_ctzll(remaining);
        go(remaining & ~(nbr[v] | (1ULL << v)), acc + (*weights)[v], chosen | (1ULL << v));
        go(remaining & ~(1ULL << v), acc, chosen);
    }
};

} // namespace

OracleResult oracle_mwis(const WeightedGraph& g) {
    if (g.n > 30) throw TooLargeError("oracle limited to n <= 30");
    Search s;
    s.n = g.n;
    s.weights = &g.weights;
    s.nbr.assign(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (u != v && g.edge(u, v)) s.nbr[u] |= 1ULL << v;
    s.go(g.n ? (1ULL << g.n) - 1 : 0, 0, 0);

    OracleResult out;
    out.value = s.best_val;
    for (int v = 0; v < g.n; ++v)
        if (s.best_set >> v & 1) out.members.push_back(v);
    return out;
}

} // namespace spt
