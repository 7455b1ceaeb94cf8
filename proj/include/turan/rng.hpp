#pragma once
// SplitMix64: seedable, splittable, identical output on every platform.
// Fixtures and traces depend on this exact sequence, so the algorithm is
// pinned here and named in serialized output.

#include <cstdint>

namespace turan {

inline constexpr const char* kRngAlgorithm = "splitmix64";

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1) with 53 bits, bit-reproducible
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

    SplitMix64 split() { return SplitMix64(next()); }
};

}  // namespace turan
