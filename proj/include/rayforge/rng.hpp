#pragma once

// Small deterministic RNG (splitmix64) so sampled checks and generators are
// reproducible across runs and platforms; the standard distributions are
// implementation-defined and unsuitable for byte-stable output.

#include <cstdint>

namespace rayforge {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long below_long(long n) { return static_cast<long>(below(static_cast<std::uint64_t>(n))); }

    // uniform dyadic rational in [0,1) with 30 bits
    double unit() { return static_cast<double>(next() >> 34) / 1073741824.0; }
};

} // namespace rayforge
