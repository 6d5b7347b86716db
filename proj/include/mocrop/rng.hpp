#pragma once

#include <cstdint>
#include <random>

namespace mocrop {

// Deterministic random source shared by sampling, synthesis, and the random
// crop policy. Backed by std::mt19937_64 whose output sequence is fixed by the
// C++ standard, so identical seeds give identical results on every platform.
// std::uniform_*_distribution is implementation-defined and therefore never
// used; bounded and real draws are derived here from raw 64-bit outputs.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform integer in [0, n). Rejection sampling over the top of the range
    // keeps the draw exactly uniform for any n.
    std::uint64_t bounded(std::uint64_t n) {
        if (n < 2) return 0;
        const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform real in [0, 1) with 53-bit resolution.
    double unit_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform real in [lo, hi).
    double real_in(double lo, double hi) { return lo + (hi - lo) * unit_real(); }

private:
    std::mt19937_64 gen_;
};

} // namespace mocrop
