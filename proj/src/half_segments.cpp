#include "spt/classes/half_segments.hpp"

#include <algorithm>
#include <set>

#include "spt/errors.hpp"

namespace spt {

namespace {

using Coord = __int128;  // differences of 64-bit coordinates stay exact

struct Pt {
    long long x, y;
};

int orient_sign(Pt a, Pt b, Pt p) {
    Coord cross = Coord(b.x - a.x) * Coord(p.y - a.y) - Coord(b.y - a.y) * Coord(p.x - a.x);
    return cross > 0 ? 1 : cross < 0 ? -1 : 0;
}

bool on_segment(Pt a, Pt b, Pt p) {
    return orient_sign(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

} // namespace

bool halfseg_intersects(const HalfSegment& r, const HalfSegment& s) {
    Pt a{r.foot_x, 0}, b{r.apex_x, r.apex_y};
    Pt c{s.foot_x, 0}, d{s.apex_x, s.apex_y};
    int o1 = orient_sign(a, b, c);
    int o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a);
    int o4 = orient_sign(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    // collinear / endpoint contact counts as intersection
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

ClassValidity halfseg_validate(const HalfSegmentInstance& inst) {
    std::set<long long> feet;
    for (int i = 0; i < static_cast<int>(inst.items.size()); ++i) {
        const HalfSegment& h = inst.items[i];
        if (h.apex_y <= 0) return {false, "apex not strictly above the x-axis", {i}};
        if (h.apex_x <= h.foot_x) return {false, "segment not leaning right (non-acute)", {i}};
        if (!feet.insert(h.foot_x).second) return {false, "duplicate foot_x", {i}};
    }
    return {};
}

std::pair<WeightedGraph, BiOrientation> halfseg_build(const HalfSegmentInstance& inst) {
    ClassValidity v = halfseg_validate(inst);
    if (!v.ok) throw InvalidInstanceError("invalid half segment instance: " + v.reason);

    const int n = static_cast<int>(inst.items.size());
    WeightedGraph g(n);
    if (!inst.weights.empty()) g.weights = inst.weights;
    BiOrientation o(n);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (halfseg_intersects(inst.items[i], inst.items[j])) {
                g.add_edge(i, j);
                continue;
            }
            int src = inst.items[i].foot_x < inst.items[j].foot_x ? i : j;
            int dst = src == i ? j : i;
            Bucket b = inst.items[dst].apex_x >= inst.items[src].apex_x ? Bucket::A : Bucket::B;
            o.add_arc(src, dst, b);
        }
    }
    return {std::move(g), std::move(o)};
}

} // namespace spt
