#pragma once

#include <cstdint>
#include <random>

namespace logrank {

// mt19937_64 output is fixed by the standard; the std distributions are not,
// so reductions are done by hand to keep seeded runs portable.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

// Bernoulli(num/den) draw.
inline bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) {
    return uniform_below(rng, den) < num;
}

// Seed for the i-th instance of a grid derived from one base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace logrank
