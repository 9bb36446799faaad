#pragma once

#include <cstdint>

#include "crn/rational.hpp"

namespace crn {

// splitmix64: tiny, platform-independent generator so that seeded runs
// produce identical bytes everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Rejection sampling keeps it unbiased.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + v % span;
    }
};

// Small strictly positive rational with numerator and denominator
// uniform on 1..max_part.
inline Rat random_positive_rational(SplitMix64& rng, std::uint64_t max_part = 100) {
    long num = static_cast<long>(rng.uniform(1, max_part));
    long den = static_cast<long>(rng.uniform(1, max_part));
    return rat(num, den);
}

}  // namespace crn
