#include "spt/classes/filaments.hpp"

#include <algorithm>
#include <set>

#include "spt/errors.hpp"

namespace spt {

namespace {

bool disjoint(const Filament& a, const Filament& b) {
    return a.r < b.l || b.r < a.l;
}

// strict containment of b's interval inside a's
bool contains(const Filament& a, const Filament& b) {
    return a.l < b.l && b.r < a.r;
}

} // namespace

bool filament_intersects(const Filament& a, const Filament& b) {
    if (disjoint(a, b)) return false;
    if (contains(a, b)) return b.h > a.h;  // inner pokes through the outer hat
    if (contains(b, a)) return a.h > b.h;
    return true;  // proper overlap: the hats must cross
}

ClassValidity filament_validate(const FilamentInstance& inst) {
    std::set<long long> endpoints;
    std::set<long long> heights;
    for (int i = 0; i < static_cast<int>(inst.items.size()); ++i) {
        const Filament& f = inst.items[i];
        if (f.l >= f.r) return {false, "interval with l >= r", {i}};
        if (f.h <= 0) return {false, "non-positive height", {i}};
        if (!endpoints.insert(f.l).second || !endpoints.insert(f.r).second)
            return {false, "duplicate interval endpoint", {i}};
        if (!heights.insert(f.h).second) return {false, "duplicate height", {i}};
    }
    return {};
}

std::pair<WeightedGraph, BiOrientation> filament_build(const FilamentInstance& inst) {
    ClassValidity v = filament_validate(inst);
    if (!v.ok) throw InvalidInstanceError("invalid filament instance: " + v.reason);

    const int n = static_cast<int>(inst.items.size());
    WeightedGraph g(n);
    if (!inst.weights.empty()) g.weights = inst.weights;
    BiOrientation o(n);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Filament& a = inst.items[i];
            const Filament& b = inst.items[j];
            if (filament_intersects(a, b)) {
                g.add_edge(i, j);
            } else if (disjoint(a, b)) {
                int src = a.l < b.l ? i : j;
                o.add_arc(src, src == i ? j : i, Bucket::A);
            } else {
                int container = contains(a, b) ? i : j;
                o.add_arc(container, container == i ? j : i, Bucket::B);
            }
        }
    }
    return {std::move(g), std::move(o)};
}

FilamentInstance overlap_to_filament(const std::vector<IntervalItem>& intervals) {
    std::set<long long> endpoints;
    for (size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].l >= intervals[i].r)
            throw InvalidInstanceError("interval with l >= r");
        if (!endpoints.insert(intervals[i].l).second || !endpoints.insert(intervals[i].r).second)
            throw InvalidInstanceError("duplicate interval endpoint");
    }
    // Heights must be pairwise distinct, so ties between equal-length
    // intervals are broken by index. Scaling by n+1 keeps every nested pair
    // ordered as by plain length: the inner interval is strictly shorter.
    const long long n = static_cast<long long>(intervals.size());
    FilamentInstance inst;
    for (long long i = 0; i < n; ++i) {
        long long len = intervals[i].r - intervals[i].l;
        inst.items.push_back(Filament{intervals[i].l, intervals[i].r, len * (n + 1) + i + 1});
        inst.weights.push_back(intervals[i].w);
    }
    return inst;
}

} // namespace spt
