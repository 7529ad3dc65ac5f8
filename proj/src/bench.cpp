#include "spt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "spt/rng.hpp"
#include "spt/solver/chain.hpp"

namespace spt {

BenchResult run_bench(ClassKind cls, const std::vector<int>& sizes, std::uint64_t seed,
                      int instances_per_size) {
    BenchResult res;
    for (int n : sizes) {
        std::vector<double> times;
        for (int i = 0; i < instances_per_size; ++i) {
            Instance inst = generate_instance(cls, n, Rng::mix(seed, n * 131ULL + i));
            auto [g, o] = build_instance(inst);
            auto t0 = std::chrono::steady_clock::now();
            ChainResult r = max_weight_chain(o, g.weights, true);
            auto t1 = std::chrono::steady_clock::now();
            (void)r;
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        res.rows.push_back({n, times[times.size() / 2]});
    }

    // least squares on (log n, log t); clamp away the clock floor
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const BenchRow& r : res.rows) {
        double x = std::log(static_cast<double>(r.n));
        double y = std::log(std::max(r.median_ms, 1e-4));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(res.rows.size());
    double denom = k * sxx - sx * sx;
    res.fitted_slope = denom != 0 ? (k * sxy - sx * sy) / denom : 0.0;
    return res;
}

} // namespace spt
