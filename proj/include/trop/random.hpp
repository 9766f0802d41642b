#pragma once

#include "trop/rational.hpp"

#include <cstdint>

namespace trop {

// SplitMix64: tiny, fast, and identical on every platform, unlike the
// standard distributions.  All randomized tests and the verify suites draw
// from this so that a seed pins the exact sample sequence.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n); modulo bias is irrelevant at our sizes.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Inclusive integer range.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Random rational with numerator in [-num_bound, num_bound] and
    // denominator in [1, den_bound].
    Rational rational(long num_bound, long den_bound) {
        return Rational(range(-num_bound, num_bound), range(1, den_bound));
    }

    // Random nonnegative rational with numerator in [0, num_bound].
    Rational nonneg_rational(long num_bound, long den_bound) {
        return Rational(range(0, num_bound), range(1, den_bound));
    }

private:
    std::uint64_t state_;
};

}  // namespace trop
