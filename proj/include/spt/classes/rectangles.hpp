#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// Axis-parallel rectangle [x1,x2] x [y1,y2], integer corners.
struct Rect {
    long long x1, y1, x2, y2;
    bool operator==(const Rect&) const = default;
};

// Rectangles all meeting the diagonal line y = x, with the promise that any
// two intersecting rectangles share a point strictly below the line.
// Inputs are assumed pre-sheared so the line is fixed.
struct RectangleInstance {
    std::vector<Rect> items;
    std::vector<Weight> weights;
};

struct ClassValidity {
    bool ok = true;
    std::string reason;
    std::vector<int> where;  // offending item index or pair
};

// Never throws; reports the offending rectangle or pair.
ClassValidity rect_validate(const RectangleInstance& inst);

bool rect_intersects(const Rect& a, const Rect& b);

// Graph: closed-box intersection. Non-edges oriented from the rectangle with
// the smaller (x1, y1, index) key; bucket A when the source's y1 is <= the
// target's, else B. Throws InvalidInstanceError when rect_validate fails.
//
// The instance invariants alone do not force the output to satisfy the
// composition axioms: boxes whose bottom-left corner lies above the line can
// break them (one box low and wide, one high, one in between). The shipped
// generator therefore samples boxes with y1 < x1, where the axioms hold;
// verify_orientation remains the safety net for hand-written inputs.
std::pair<WeightedGraph, BiOrientation> rect_build(const RectangleInstance& inst);

} // namespace spt
