#pragma once

#include "qstats/exactnum.hpp"
#include "qstats/occupancy.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qstats {

// Quanta vector (kappa_1, ..., kappa_N): quanta held by each particle.
struct Composition {
    std::vector<int> quanta;

    long long total() const;

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

// Pooled histogram from repeated uniform state draws. slot1 keeps the
// first-particle marginal separately: unlike the pooled counts it is a plain
// iid multinomial sample, which is what a chi-square test wants.
struct SampleStats {
    std::uint64_t draws = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> hist;   // index kappa = 0..s, pooled over slots
    std::vector<std::uint64_t> slot1;  // index kappa = 0..s, first slot only

    std::uint64_t total_count() const;
};

/// S_II = C(N+s-1, s): number of quanta-picture states. N >= 1.
BigInt count_states(long long N, long long s);

/// All compositions of s into N nonnegative parts, lexicographic.
/// Throws std::length_error above kEnumerationCap.
std::vector<Composition> enumerate_compositions(long long N, long long s);

/// S_kappa = C(N+s-kappa-2, s-kappa): states with a given slot pinned at
/// kappa. Requires N >= 2 and 0 <= kappa <= s.
BigInt count_states_with_level(long long N, long long s, long long kappa);

/// p(kappa) = S_kappa / S_II (route = quanta); for N = 1 the delta at s.
DistTable quanta_pmf(long long N, long long s);

/// One state drawn uniformly from all S_II compositions via a uniform
/// (N-1)-subset of bar positions among N+s-1 slots (Floyd's sampling).
Composition sample_state(long long N, long long s, std::mt19937_64& rng);

/// Pooled kappa-histogram of `draws` uniform states. Work is partitioned
/// into fixed blocks with derived seeds, so the result is identical for any
/// thread count. threads = 0 picks the hardware default.
SampleStats sample_histogram(long long N, long long s, std::uint64_t draws,
                             std::uint64_t seed, unsigned threads = 0);

struct RouteCheck {
    long long N = 0;
    long long s = 0;
    bool totals_equal = false;
    bool pmf_equal = false;
    std::vector<long long> mismatched_levels;

    bool pass() const { return totals_equal && pmf_equal; }
};

/// Asserts C_I = S_II and the entrywise equality of the two p(kappa) routes.
RouteCheck cross_route_check(long long N, long long s);

std::string to_json(const SampleStats& stats);

}  // namespace qstats
