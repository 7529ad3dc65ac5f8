#pragma once

#include <utility>
#include <vector>

#include "spt/classes/rectangles.hpp"  // ClassValidity
#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// Hat-shaped curve of height h over the interval [l, r].
struct Filament {
    long long l, r, h;  // l < r, h > 0
    bool operator==(const Filament&) const = default;
};

// All 2n interval endpoints pairwise distinct, all heights pairwise distinct.
struct FilamentInstance {
    std::vector<Filament> items;
    std::vector<Weight> weights;
};

ClassValidity filament_validate(const FilamentInstance& inst);

// Two hats meet iff their intervals properly overlap, or are nested with the
// inner one taller than the outer.
bool filament_intersects(const Filament& a, const Filament& b);

// Non-edges: disjoint intervals get an A arc left to right; nested intervals
// (inner strictly lower) get a B arc container to containee.
std::pair<WeightedGraph, BiOrientation> filament_build(const FilamentInstance& inst);

// Interval with weight, used by the overlap-graph reduction.
struct IntervalItem {
    long long l, r;  // l < r
    Weight w;
};

// Builds a filament instance whose intersection graph is exactly the overlap
// graph of the intervals: heights grow with interval length, so nested pairs
// (inner strictly shorter) never meet while properly overlapping pairs do.
// Requires all 2n endpoints pairwise distinct.
FilamentInstance overlap_to_filament(const std::vector<IntervalItem>& intervals);

} // namespace spt
