#include "spt/classes/rectangles.hpp"

#include <algorithm>
#include <tuple>

#include "spt/errors.hpp"

namespace spt {

bool rect_intersects(const Rect& a, const Rect& b) {
    return a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2;
}

ClassValidity rect_validate(const RectangleInstance& inst) {
    ClassValidity v;
    const auto& items = inst.items;
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        const Rect& r = items[i];
        if (r.x1 >= r.x2 || r.y1 >= r.y2) {
            return {false, "degenerate rectangle", {i}};
        }
        // meets the line y = x iff max(x1,y1) <= min(x2,y2)
        if (std::max(r.x1, r.y1) > std::min(r.x2, r.y2)) {
            return {false, "rectangle misses the diagonal line", {i}};
        }
    }
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(items.size()); ++j) {
            const Rect& a = items[i];
            const Rect& b = items[j];
            if (!rect_intersects(a, b)) continue;
            // intersection box [X1,X2] x [Y1,Y2] holds a point with y < x
            // iff Y1 < X2 (strict)
            long long max_x = std::min(a.x2, b.x2);
            long long min_y = std::max(a.y1, b.y1);
            if (!(min_y < max_x)) {
                return {false, "intersecting pair does not meet below the line", {i, j}};
            }
        }
    }
    return v;
}

std::pair<WeightedGraph, BiOrientation> rect_build(const RectangleInstance& inst) {
    ClassValidity v = rect_validate(inst);
    if (!v.ok) throw InvalidInstanceError("invalid rectangle instance: " + v.reason);

    const int n = static_cast<int>(inst.items.size());
    WeightedGraph g(n);
    if (!inst.weights.empty()) g.weights = inst.weights;
    BiOrientation o(n);

    auto key = [&](int i) {
        return std::make_tuple(inst.items[i].x1, inst.items[i].y1, i);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rect_intersects(inst.items[i], inst.items[j])) {
                g.add_edge(i, j);
                continue;
            }
            int src = key(i) < key(j) ? i : j;
            int dst = src == i ? j : i;
            Bucket b = inst.items[src].y1 <= inst.items[dst].y1 ? Bucket::A : Bucket::B;
            o.add_arc(src, dst, b);
        }
    }
    return {std::move(g), std::move(o)};
}

} // namespace spt
