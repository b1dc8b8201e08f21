#pragma once

#include "qstats/exactnum.hpp"

#include <string>
#include <vector>

namespace qstats {

// Practical bound on explicit enumeration; closed forms stay available at
// any size.
inline constexpr long long kEnumerationCap = 10'000'000;

// Occupancy vector (n_0, ..., n_s): number of particles per energy level.
// A valid state has sum(n_k) = N and sum(k*n_k) = s where s = length - 1.
struct LevelState {
    std::vector<int> occupancies;

    long long particle_count() const;  // N
    long long energy() const;          // sum of k * n_k
    long long top_level() const { return static_cast<long long>(occupancies.size()) - 1; }

    bool operator==(const LevelState&) const = default;
};

/// Throws std::invalid_argument unless the state invariants hold.
void validate(const LevelState& state);

struct StateRecord {
    LevelState state;
    BigInt configurations;
    BigRat probability;
};

enum class Route { levels, quanta };

std::string route_name(Route route);

// Distribution of the number of quanta held by one particle: p[kappa] for
// kappa = 0..s, exact, summing to 1.
struct DistTable {
    long long N = 0;
    long long s = 0;
    Route route = Route::levels;
    std::vector<BigRat> p;

    bool operator==(const DistTable& other) const {
        return N == other.N && s == other.s && p == other.p;
    }
};

/// All solutions of the particle- and energy-conservation equations, in
/// lexicographic order on (n_0, ..., n_s). Throws std::length_error when the
/// state count exceeds kEnumerationCap.
std::vector<LevelState> enumerate_level_states(long long N, long long s);

/// Number of configurations (complexions) of a state: N! / prod(n_k!).
BigInt configurations(const LevelState& state);

/// Total configurations over all states: (N+s-1)! / (s! (N-1)!). N >= 1.
BigInt total_configurations(long long N, long long s);

/// Same quantity extracted as the y^s coefficient of ((1-y^{s+1})/(1-y))^N
/// by truncated exact polynomial arithmetic.
BigInt gf_total_configurations(long long N, long long s);

/// configurations(state) / total_configurations.
BigRat state_probability(const LevelState& state);

/// p(n/kappa): probability that exactly n particles sit in level kappa.
/// Indexed n = 0..N; sums to 1.
std::vector<BigRat> conditional_occupancy_pmf(long long N, long long s, long long kappa);

/// Average occupancy <n_kappa> = N * C(N+s-kappa-2, N-2) / C_I for N >= 2;
/// for N = 1 the physical answer is forced: 1 if kappa = s, else 0.
BigRat mean_occupancy(long long N, long long s, long long kappa);

/// <n_kappa> extracted as the y^s coefficient of
/// (N/C_I) y^kappa ((1-y^{s+1})/(1-y))^{N-1}.
BigRat gf_mean_occupancy(long long N, long long s, long long kappa);

/// p(kappa) = <n_kappa>/N = C(N+s-kappa-2, N-2) / C(N+s-1, N-1).
DistTable level_pmf(long long N, long long s);

/// Every state attaining the maximum configuration count. A result of
/// length > 1 flags the tie that makes "most probable state" ill-defined.
std::vector<StateRecord> most_probable_states(long long N, long long s);

// Serialization of DistTable (JSON object and CSV with header k,num,den,float).
std::string to_json(const DistTable& table);
std::string to_csv(const DistTable& table);

}  // namespace qstats
