#include "spt/solver/chain.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace spt {

namespace {

constexpr Weight kUnset = std::numeric_limits<Weight>::min() / 4;

// value first, then fewer members; scan order settles remaining ties
struct Best {
    Weight val = 0;
    int cnt = 0;
    int pick = -1;

    bool improve(Weight v, int c, int p) {
        if (v > val || (v == val && c < cnt)) {
            val = v;
            cnt = c;
            pick = p;
            return true;
        }
        return false;
    }
};

} // namespace

ChainResult max_weight_chain(const BiOrientation& o, const std::vector<Weight>& weights,
                             bool skip_verify) {
    const int n = o.n;
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("weights size mismatch");
    for (Weight w : weights)
        if (w < 0) throw std::invalid_argument("negative weight");

    if (!skip_verify) {
        VerifierReport rep = verify_orientation(WeightedGraph(n), o, false);
        if (!rep.spt_pass())
            throw PreconditionError("orientation is not strongly pseudo transitive", rep);
    }

    std::vector<int> topo = topological_order(o);
    std::vector<int> topo_pos(n);
    for (int i = 0; i < n; ++i) topo_pos[topo[i]] = i;

    std::vector<std::vector<int>> a_succ(n), b_succ(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int c = o.arc_code(u, v);
            if (c == 1) a_succ[u].push_back(v);
            else if (c == 2) b_succ[u].push_back(v);
        }

    const int bot = n;  // sentinel follower
    const size_t tw = static_cast<size_t>(n) + 1;
    std::vector<Weight> t_val(static_cast<size_t>(n) * tw, kUnset);
    std::vector<int> t_cnt(static_cast<size_t>(n) * tw, 0);
    std::vector<int> t_end(static_cast<size_t>(n) * tw, -1);
    // best sibling chain ending at child c under parent u, c's own block excluded
    std::vector<Weight> m_val(static_cast<size_t>(n) * n, 0);
    std::vector<int> m_cnt(static_cast<size_t>(n) * n, 0);
    std::vector<int> m_prev(static_cast<size_t>(n) * n, -1);

    auto t_at = [&](int u, int e) { return static_cast<size_t>(u) * tw + (e == bot ? n : e); };
    auto m_at = [&](int u, int c) { return static_cast<size_t>(u) * n + c; };

    for (int i = n - 1; i >= 0; --i) {
        int u = topo[i];
        std::vector<int> children = b_succ[u];
        std::sort(children.begin(), children.end(),
                  [&](int a, int b) { return topo_pos[a] < topo_pos[b]; });

        // sibling chains run along A arcs between children of u
        for (int second : children) {
            Best best;  // empty chain
            for (int first : children) {
                if (first == second) break;  // children sorted by topo position
                if (o.arc_code(first, second) != 1) continue;
                best.improve(m_val[m_at(u, first)] + t_val[t_at(first, second)],
                             m_cnt[m_at(u, first)] + t_cnt[t_at(first, second)], first);
            }
            m_val[m_at(u, second)] = best.val;
            m_cnt[m_at(u, second)] = best.cnt;
            m_prev[m_at(u, second)] = best.pick;
        }

        // one table entry per admissible follower
        auto fill = [&](int e) {
            Best best;  // no children
            for (int c : children) {
                if (e != bot && o.arc_code(c, e) != 1) continue;  // block cannot end before e
                best.improve(m_val[m_at(u, c)] + t_val[t_at(c, e)],
                             m_cnt[m_at(u, c)] + t_cnt[t_at(c, e)], c);
            }
            t_val[t_at(u, e)] = weights[u] + best.val;
            t_cnt[t_at(u, e)] = 1 + best.cnt;
            t_end[t_at(u, e)] = best.pick;
        };
        fill(bot);
        for (int e : a_succ[u]) fill(e);
    }

    // top-level blocks linked through A arcs
    std::vector<Weight> r_val(n);
    std::vector<int> r_cnt(n), r_next(n, -1);
    for (int i = n - 1; i >= 0; --i) {
        int u = topo[i];
        Best best;
        best.val = t_val[t_at(u, bot)];
        best.cnt = t_cnt[t_at(u, bot)];
        for (int r2 : a_succ[u])
            best.improve(t_val[t_at(u, r2)] + r_val[r2], t_cnt[t_at(u, r2)] + r_cnt[r2], r2);
        r_val[u] = best.val;
        r_cnt[u] = best.cnt;
        r_next[u] = best.pick;
    }

    Best overall;  // the empty chain is always available
    for (int r = 0; r < n; ++r) overall.improve(r_val[r], r_cnt[r], r);

    ChainResult res;
    res.value = overall.val;
    if (overall.pick >= 0) {
        // unwind backpointers; recursion depth is bounded by the chain length
        struct Walker {
            const BiOrientation& o;
            const std::vector<Weight>& t_val;
            const std::vector<int>& t_end;
            const std::vector<int>& m_prev;
            size_t tw;
            int n, bot;
            ChainResult& out;

            size_t t_at(int u, int e) const { return static_cast<size_t>(u) * tw + (e == bot ? n : e); }

            void block(int u, int e, MemberTrace::Role role, int parent, int prev_sibling) {
                MemberTrace tr;
                tr.vertex = u;
                tr.role = role;
                tr.parent = parent;
                tr.prev_sibling = prev_sibling;
                tr.follower = (e == bot ? -1 : e);
                out.certificate.push_back(tr);
                out.members.push_back(u);

                int last = t_end[t_at(u, e)];
                if (last < 0) return;
                std::vector<int> chain;
                for (int c = last; c >= 0; c = m_prev[static_cast<size_t>(u) * n + c])
                    chain.push_back(c);
                std::reverse(chain.begin(), chain.end());
                for (size_t k = 0; k < chain.size(); ++k) {
                    int follower = (k + 1 < chain.size()) ? chain[k + 1] : e;
                    block(chain[k], follower, MemberTrace::Role::Child, u,
                          k > 0 ? chain[k - 1] : -1);
                }
            }
        } walker{o, t_val, t_end, m_prev, tw, n, bot, res};

        for (int r = overall.pick; r >= 0;) {
            int next = r_next[r];
            walker.block(r, next < 0 ? bot : next, MemberTrace::Role::Root, -1, -1);
            r = next;
        }
    }
    std::sort(res.members.begin(), res.members.end());

    // soundness gate: members must be pairwise adjacent in the arc set
    Weight sum = 0;
    for (int v : res.members) sum += weights[v];
    if (sum != res.value) throw std::logic_error("chain solver: value does not match members");
    for (size_t i = 0; i < res.members.size(); ++i)
        for (size_t j = i + 1; j < res.members.size(); ++j) {
            int x = res.members[i], y = res.members[j];
            if (!o.has_arc(x, y) && !o.has_arc(y, x))
                throw std::logic_error("chain solver: members not pairwise adjacent");
        }
    return res;
}

ChainResult mwis(const WeightedGraph& g, const BiOrientation& o, bool skip_verify) {
    if (!skip_verify) {
        VerifierReport rep = verify_orientation(g, o, true);
        if (!rep.required_pass())
            throw PreconditionError("orientation does not cover the complement or fails the axioms",
                                    rep);
    }
    ChainResult res = max_weight_chain(o, g.weights, true);
    for (size_t i = 0; i < res.members.size(); ++i)
        for (size_t j = i + 1; j < res.members.size(); ++j)
            if (g.edge(res.members[i], res.members[j]))
                throw std::logic_error("mwis: members not independent");
    return res;
}

} // namespace spt
