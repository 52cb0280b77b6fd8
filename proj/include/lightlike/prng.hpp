// Minimal deterministic generator (splitmix64). Seeded runs must reproduce
// bit-exactly across platforms, so no std::uniform_* distributions here.

#pragma once

#include <cstdint>

#include "lightlike/rational.hpp"

namespace lightlike {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi]; modulo bias is irrelevant for our use.
    long long uniform_int(long long lo, long long hi) {
        return lo + (long long)(next() % (std::uint64_t)(hi - lo + 1));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

    // Small rational with numerator in [-num_max, num_max], denominator in
    // [1, den_max].
    Rational rational(long long num_max, long long den_max) {
        return Rational(uniform_int(-num_max, num_max), uniform_int(1, den_max));
    }

private:
    std::uint64_t state_;
};

}  // namespace lightlike
