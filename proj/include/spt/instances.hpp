#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spt/chordal/peo.hpp"
#include "spt/chordal/subtrees.hpp"
#include "spt/classes/dag_order.hpp"
#include "spt/classes/filaments.hpp"
#include "spt/classes/half_segments.hpp"
#include "spt/classes/rectangles.hpp"
#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

// Intervals with weights; built through the filament reduction.
struct OverlapInstance {
    std::vector<IntervalItem> items;
};

using Instance = std::variant<RectangleInstance, HalfSegmentInstance, FilamentInstance,
                              OverlapInstance, DagInstance, SubtreeInstance, PeoInstance>;

enum class ClassKind {
    Rectangles,
    HalfSegments,
    Filaments,
    Overlap,
    Dag,
    ChordalSubtrees,
    ChordalPeo,
};

// CLI names: rectangles, half_segments, filaments, overlap, dag,
// chordal_subtrees, chordal_peo. Throws std::invalid_argument on unknown.
ClassKind class_from_name(const std::string& name);
std::string class_name(ClassKind k);
const std::vector<ClassKind>& all_classes();

struct GenParams {
    Weight weight_lo = 0;
    Weight weight_hi = 100;
};

// Deterministic for fixed (class, n, seed, params); the generated instance
// passes its class validator. Throws InvalidInstanceError when the
// rectangle rejection sampler exhausts its retry budget, and
// std::invalid_argument for n < 1 or a bad weight range.
Instance generate_instance(ClassKind cls, int n, std::uint64_t seed, const GenParams& params = {});

// Dispatches to the class build operation.
std::pair<WeightedGraph, BiOrientation> build_instance(const Instance& inst);

// Which classes promise the strengthened first_type axiom.
bool class_claims_first_type(ClassKind k);

} // namespace spt
