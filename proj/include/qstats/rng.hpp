#pragma once

#include <cstdint>
#include <random>

namespace qstats {

/// SplitMix64 finalizer; used to derive independent block seeds from a user
/// seed without correlating nearby values.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform integer in [0, bound), exact (rejection sampling); bound > 0.
std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in the open interval (0, 1).
double unit_open(std::mt19937_64& rng);

/// Standard exponential variate, -log(U) with U in (0, 1).
double unit_exponential(std::mt19937_64& rng);

}  // namespace qstats
