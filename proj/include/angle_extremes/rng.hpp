#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace angle_extremes {

// splitmix64 step; used to derive decorrelated per-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent engine for (seed, stream). Stream k always produces the same
// sequence regardless of how many other streams run or on which thread.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s))};
    return std::mt19937_64(seq);
}

// Uniform in [0, 1) with 53 random bits. Hand-rolled so results do not depend
// on the standard library's unspecified uniform_real_distribution algorithm.
inline double uniform_unit(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Standard normal via the Marsaglia polar method (one value per call; the
// spare is discarded to keep the consumption pattern trivially reproducible).
inline double normal_unit(std::mt19937_64& g) {
    for (;;) {
        double x = 2.0 * uniform_unit(g) - 1.0;
        double y = 2.0 * uniform_unit(g) - 1.0;
        double r2 = x * x + y * y;
        if (r2 > 0.0 && r2 < 1.0) {
            return x * std::sqrt(-2.0 * std::log(r2) / r2);
        }
    }
}

}  // namespace angle_extremes
