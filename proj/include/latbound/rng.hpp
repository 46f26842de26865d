#pragma once

#include <cstdint>

namespace latbound {

// SplitMix64. Chosen for exact cross-platform reproducibility of trial
// streams; outputs are a pure function of the 64-bit state.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi] by rejection; no modulo bias.
    long long uniform_int(long long lo, long long hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1ULL;
        std::uint64_t limit = range * (~0ULL / range);
        std::uint64_t u;
        do {
            u = next();
        } while (u >= limit);
        return lo + static_cast<long long>(u % range);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based stream: disjoint, reproducible streams per (seed, index).
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g;
    g.state = mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
    return g;
}

}  // namespace latbound
