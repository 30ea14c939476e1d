#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace dyncol {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound), identical on every platform for a given
// engine state (std::uniform_int_distribution is implementation-defined).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

inline int uniform_int(Rng& rng, int lo, int hi)
{
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

} // namespace dyncol
