#pragma once

#include <utility>
#include <vector>

#include "spt/classes/rectangles.hpp"  // ClassValidity
#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// Segment from (foot_x, 0) up to (apex_x, apex_y); apex_x > foot_x and
// apex_y > 0, so the segment leans right at an acute angle with the x-axis.
struct HalfSegment {
    long long foot_x, apex_x, apex_y;
    bool operator==(const HalfSegment&) const = default;
};

struct HalfSegmentInstance {
    std::vector<HalfSegment> items;  // feet pairwise distinct
    std::vector<Weight> weights;
};

ClassValidity halfseg_validate(const HalfSegmentInstance& inst);

// Exact closed-segment intersection via integer orientation tests; endpoint
// contact counts as intersection. Symmetric.
bool halfseg_intersects(const HalfSegment& r, const HalfSegment& s);

// Non-edges oriented from the segment with the smaller foot; bucket A when
// the target's apex_x reaches at least the source's, else B.
std::pair<WeightedGraph, BiOrientation> halfseg_build(const HalfSegmentInstance& inst);

} // namespace spt
