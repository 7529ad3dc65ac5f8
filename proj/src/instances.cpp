#include "spt/instances.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spt/errors.hpp"
#include "spt/rng.hpp"

namespace spt {

ClassKind class_from_name(const std::string& name) {
    if (name == "rectangles") return ClassKind::Rectangles;
    if (name == "half_segments") return ClassKind::HalfSegments;
    if (name == "filaments") return ClassKind::Filaments;
    if (name == "overlap") return ClassKind::Overlap;
    if (name == "dag") return ClassKind::Dag;
    if (name == "chordal_subtrees") return ClassKind::ChordalSubtrees;
    if (name == "chordal_peo") return ClassKind::ChordalPeo;
    throw std::invalid_argument("unknown class: " + name);
}

std::string class_name(ClassKind k) {
    switch (k) {
        case ClassKind::Rectangles: return "rectangles";
        case ClassKind::HalfSegments: return "half_segments";
        case ClassKind::Filaments: return "filaments";
        case ClassKind::Overlap: return "overlap";
        case ClassKind::Dag: return "dag";
        case ClassKind::ChordalSubtrees: return "chordal_subtrees";
        case ClassKind::ChordalPeo: return "chordal_peo";
    }
    throw std::invalid_argument("bad class kind");
}

const std::vector<ClassKind>& all_classes() {
    static const std::vector<ClassKind> kAll = {
        ClassKind::Rectangles,      ClassKind::HalfSegments, ClassKind::Filaments,
        ClassKind::Overlap,         ClassKind::Dag,          ClassKind::ChordalSubtrees,
        ClassKind::ChordalPeo,
    };
    return kAll;
}

bool class_claims_first_type(ClassKind k) {
    switch (k) {
        case ClassKind::Rectangles:
        case ClassKind::HalfSegments:
            return false;  // measured empirically, never asserted
        default:
            return true;
    }
}

namespace {

std::vector<Weight> random_weights(int n, Rng& rng, const GenParams& p) {
    std::vector<Weight> w(n);
    for (int i = 0; i < n; ++i) w[i] = rng.range(p.weight_lo, p.weight_hi);
    return w;
}

// k distinct values from [lo, hi], in random order
std::vector<long long> distinct_values(Rng& rng, int k, long long lo, long long hi) {
    std::set<long long> seen;
    std::vector<long long> out;
    while (static_cast<int>(out.size()) < k) {
        long long v = rng.range(lo, hi);
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

// Boxes the line crosses from the left edge to the right edge (y1 < x1 and
// x2 < y2): every vertical slice then meets the line, so two boxes intersect
// exactly when their x-ranges overlap, always sharing a point on the line
// and one strictly below it. Disjointness composes along the x1 order,
// which makes the orientation rule strongly pseudo transitive. Sampling the
// instance invariants alone admits counterexamples (see the rect_build
// notes), so the generator stays inside this sound family. Distinct x
// endpoints keep overlaps full-dimensional and the (x1, y1, index) key
// tie-free.
RectangleInstance gen_rectangles(int n, Rng& rng, const GenParams& p) {
    const long long reach = 8LL * n + 8;  // deep dips below the line feed bucket B
    RectangleInstance inst;
    std::vector<long long> xs = distinct_values(rng, 2 * n, 0, 8LL * n + 8);
    for (int i = 0; i < n; ++i) {
        long long a = std::min(xs[2 * i], xs[2 * i + 1]);
        long long b = std::max(xs[2 * i], xs[2 * i + 1]);
        Rect r;
        r.x1 = a;
        r.x2 = b;
        r.y1 = a - 1 - rng.range(0, reach);
        r.y2 = b + 1 + rng.range(0, reach);
        inst.items.push_back(r);
    }
    inst.weights = random_weights(n, rng, p);
    if (!rect_validate(inst).ok)
        throw InvalidInstanceError("rectangle generator produced an invalid instance");
    return inst;
}

HalfSegmentInstance gen_half_segments(int n, Rng& rng, const GenParams& p) {
    HalfSegmentInstance inst;
    std::vector<long long> feet = distinct_values(rng, n, 0, 8LL * n + 8);
    for (int i = 0; i < n; ++i) {
        HalfSegment h;
        h.foot_x = feet[i];
        h.apex_x = h.foot_x + 1 + rng.range(0, 8LL * n + 8);  // long spans nest, feeding B
        h.apex_y = 1 + rng.range(0, 4LL * n + 4);
        inst.items.push_back(h);
    }
    inst.weights = random_weights(n, rng, p);
    return inst;
}

FilamentInstance gen_filaments(int n, Rng& rng, const GenParams& p) {
    FilamentInstance inst;
    std::vector<long long> pts = distinct_values(rng, 2 * n, 0, 8LL * n + 8);
    std::vector<long long> hts = distinct_values(rng, n, 1, 4LL * n + 4);
    for (int i = 0; i < n; ++i) {
        long long a = pts[2 * i], b = pts[2 * i + 1];
        inst.items.push_back(Filament{std::min(a, b), std::max(a, b), hts[i]});
    }
    inst.weights = random_weights(n, rng, p);
    return inst;
}

OverlapInstance gen_overlap(int n, Rng& rng, const GenParams& p) {
    OverlapInstance inst;
    std::vector<long long> pts = distinct_values(rng, 2 * n, 0, 8LL * n + 8);
    std::vector<Weight> w = random_weights(n, rng, p);
    for (int i = 0; i < n; ++i) {
        long long a = pts[2 * i], b = pts[2 * i + 1];
        inst.items.push_back(IntervalItem{std::min(a, b), std::max(a, b), w[i]});
    }
    return inst;
}

DagInstance gen_dag(int n, Rng& rng, const GenParams& p) {
    DagInstance inst;
    inst.n = n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(100) < 30) inst.arcs.emplace_back(perm[i], perm[j]);
    inst.weights = random_weights(n, rng, p);
    return inst;
}

SubtreeInstance gen_subtrees(int n, Rng& rng, const GenParams& p) {
    SubtreeInstance inst;
    int hn = n + 1 + static_cast<int>(rng.below(n + 1));  // host a bit larger than n
    inst.tree.parent.assign(hn, -1);
    inst.tree.children.assign(hn, {});
    for (int v = 1; v < hn; ++v) {
        int par = static_cast<int>(rng.below(v));
        inst.tree.parent[v] = par;
        inst.tree.children[par].push_back(v);
    }
    for (auto& ch : inst.tree.children)  // shuffle the embedding
        for (int i = static_cast<int>(ch.size()) - 1; i > 0; --i)
            std::swap(ch[i], ch[rng.below(i + 1)]);

    for (int i = 0; i < n; ++i) {
        int want = 1 + static_cast<int>(rng.below(std::max(1, hn / 2)));
        std::vector<char> in_set(hn, 0);
        std::vector<int> members, frontier;
        int start = static_cast<int>(rng.below(hn));
        in_set[start] = 1;
        members.push_back(start);
        auto grow_frontier = [&](int v) {
            if (inst.tree.parent[v] >= 0 && !in_set[inst.tree.parent[v]])
                frontier.push_back(inst.tree.parent[v]);
            for (int c : inst.tree.children[v])
                if (!in_set[c]) frontier.push_back(c);
        };
        grow_frontier(start);
        while (static_cast<int>(members.size()) < want && !frontier.empty()) {
            int pick = static_cast<int>(rng.below(frontier.size()));
            int v = frontier[pick];
            frontier[pick] = frontier.back();
            frontier.pop_back();
            if (in_set[v]) continue;
            in_set[v] = 1;
            members.push_back(v);
            grow_frontier(v);
        }
        std::sort(members.begin(), members.end());
        inst.subtrees.push_back(std::move(members));
    }
    inst.weights = random_weights(n, rng, p);
    return inst;
}

PeoInstance gen_peo(int n, Rng& rng, const GenParams& p) {
    SubtreeInstance sub = gen_subtrees(n, rng, p);
    PeoInstance inst;
    inst.graph = subtree_intersection_graph(sub);
    inst.order = mcs_peo(inst.graph);
    return inst;
}

} // namespace

Instance generate_instance(ClassKind cls, int n, std::uint64_t seed, const GenParams& params) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (params.weight_lo < 0 || params.weight_lo > params.weight_hi)
        throw std::invalid_argument("bad weight range");
    Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(cls) + 1));
    switch (cls) {
        case ClassKind::Rectangles: return gen_rectangles(n, rng, params);
        case ClassKind::HalfSegments: return gen_half_segments(n, rng, params);
        case ClassKind::Filaments: return gen_filaments(n, rng, params);
        case ClassKind::Overlap: return gen_overlap(n, rng, params);
        case ClassKind::Dag: return gen_dag(n, rng, params);
        case ClassKind::ChordalSubtrees: return gen_subtrees(n, rng, params);
        case ClassKind::ChordalPeo: return gen_peo(n, rng, params);
    }
    throw std::invalid_argument("bad class kind");
}

std::pair<WeightedGraph, BiOrientation> build_instance(const Instance& inst) {
    return std::visit(
        [](const auto& v) -> std::pair<WeightedGraph, BiOrientation> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RectangleInstance>) return rect_build(v);
            else if constexpr (std::is_same_v<T, HalfSegmentInstance>) return halfseg_build(v);
            else if constexpr (std::is_same_v<T, FilamentInstance>) return filament_build(v);
            else if constexpr (std::is_same_v<T, OverlapInstance>)
                return filament_build(overlap_to_filament(v.items));
            else if constexpr (std::is_same_v<T, DagInstance>) return incomparability_build(v);
            else if constexpr (std::is_same_v<T, SubtreeInstance>) return chordal_subtree_build(v);
            else return chordal_peo_build(v);
        },
        inst);
}

} // namespace spt
