#pragma once

#include <cstddef>
#include <cstdint>

namespace pmv {

/// Deterministic stream generator used for the reproducible sample grids.
/// Fully specified here so results are identical across platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); n must be nonzero.
    uint64_t below(uint64_t n) { return next() % n; }
};

/// Options for deterministic sampling of infinite carriers.
struct GridOptions {
    std::size_t budget = 512;
    uint64_t seed = 0;
};

} // namespace pmv
