#pragma once

#include <cstdint>
#include <vector>

#include "spt/instances.hpp"

namespace spt {

struct BenchRow {
    int n = 0;
    double median_ms = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    double fitted_slope = 0.0;  // least-squares slope of log(time) vs log(n)
};

// Median wall-clock time of the chain solve (verification excluded) over
// `instances_per_size` seeded instances per size. The filament class
// exercises both buckets heavily and is the default scaling workload.
BenchResult run_bench(ClassKind cls, const std::vector<int>& sizes, std::uint64_t seed,
                      int instances_per_size = 5);

} // namespace spt
