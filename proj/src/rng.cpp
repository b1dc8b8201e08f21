#include "qstats/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qstats {

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("bounded_uniform: bound must be positive");
    }
    // Reject the short final stretch so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

double unit_open(std::mt19937_64& rng) {
    // 53 random bits centered in (0,1): never exactly 0 or 1.
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double unit_exponential(std::mt19937_64& rng) {
    return -std::log(unit_open(rng));
}

}  // namespace qstats
