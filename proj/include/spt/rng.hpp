#pragma once

#include <cstdint>

namespace spt {

// splitmix64 stream. Hand-rolled so that seeded output is identical on every
// platform; <random> distributions do not guarantee that.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound); returns 0 for bound == 0
    std::uint64_t below(std::uint64_t bound) {
        return bound ? next() % bound : 0;
    }

    // uniform in [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // decorrelated stream for a sub-task (fuzz trials, generator phases)
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        Rng r(seed ^ (0x632be59bd9b4e019ULL + salt * 0x9e3779b97f4a7c15ULL));
        return r.next();
    }
};

} // namespace spt
