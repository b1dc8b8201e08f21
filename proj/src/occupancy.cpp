#include "qstats/occupancy.hpp"

#include "qstats/continuum.hpp"
#include "qstats/partitions.hpp"
#include "qstats/polynomial.hpp"

#include <json.hpp>

#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qstats {

long long LevelState::particle_count() const {
    long long n = 0;
    for (int v : occupancies) {
        n += v;
    }
    return n;
}

long long LevelState::energy() const {
    long long e = 0;
    for (std::size_t k = 0; k < occupancies.size(); ++k) {
        e += static_cast<long long>(k) * occupancies[k];
    }
    return e;
}

void validate(const LevelState& state) {
    if (state.occupancies.empty()) {
        throw std::invalid_argument("LevelState: occupancy vector is empty");
    }
    for (int v : state.occupancies) {
        if (v < 0) {
            throw std::invalid_argument("LevelState: negative occupancy");
        }
    }
    if (state.energy() != state.top_level()) {
        throw std::invalid_argument("LevelState: energy does not match level count");
    }
}

std::string route_name(Route route) {
    return route == Route::levels ? "levels" : "quanta";
}

namespace {

void check_counts(long long N, long long s, const char* where) {
    if (N < 0 || s < 0) {
        throw std::invalid_argument(std::string(where) + ": negative argument");
    }
    if (N > std::numeric_limits<int>::max() || s > std::numeric_limits<int>::max()) {
        throw std::invalid_argument(std::string(where) + ": argument too large");
    }
}

// Depth-first descent over levels 0..s choosing each n_j in ascending order,
// which yields the lexicographic output order directly. Remaining particles P
// must be placeable in levels > j: (j+1)*P' <= E' <= s*P'.
void descend(long long s, long long level, long long particles_left,
             long long energy_left, std::vector<int>& prefix,
             std::vector<LevelState>& out) {
    if (level == s) {
        if (s * particles_left == energy_left) {
            prefix.push_back(static_cast<int>(particles_left));
            out.push_back(LevelState{prefix});
            prefix.pop_back();
        }
        return;
    }
    long long lo = std::max<long long>(0, (level + 1) * particles_left - energy_left);
    long long hi = particles_left;
    if (level > 0) {
        hi = std::min(hi, energy_left / level);
    }
    // s*P' >= E'  <=>  n_j <= (s*P - E) / (s - j)
    hi = std::min(hi, (s * particles_left - energy_left) / (s - level));
    for (long long n = lo; n <= hi; ++n) {
        prefix.push_back(static_cast<int>(n));
        descend(s, level + 1, particles_left - n, energy_left - level * n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<LevelState> enumerate_level_states(long long N, long long s) {
    check_counts(N, s, "enumerate_level_states");
    if (N == 0) {
        if (s == 0) {
            return {LevelState{{0}}};
        }
        return {};
    }
    const BigInt count = restricted_partition_count(s, std::min(N, s));
    if (count > kEnumerationCap) {
        throw std::length_error("enumerate_level_states: " + count.str() +
                                " states exceeds the enumeration cap");
    }
    std::vector<LevelState> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(s) + 1);
    if (s == 0) {
        out.push_back(LevelState{{static_cast<int>(N)}});
        return out;
    }
    descend(s, 0, N, s, prefix, out);
    return out;
}

BigInt configurations(const LevelState& state) {
    validate(state);
    BigInt result = factorial(state.particle_count());
    for (int v : state.occupancies) {
        if (v > 1) {
            result /= factorial(v);
        }
    }
    return result;
}

BigInt total_configurations(long long N, long long s) {
    check_counts(N, s, "total_configurations");
    if (N < 1) {
        throw std::invalid_argument("total_configurations: N must be positive");
    }
    return binomial(N + s - 1, s);
}

BigInt gf_total_configurations(long long N, long long s) {
    check_counts(N, s, "gf_total_configurations");
    if (N < 1) {
        throw std::invalid_argument("gf_total_configurations: N must be positive");
    }
    // (1 - y^{s+1})/(1 - y) = 1 + y + ... + y^s exactly.
    const Poly power = poly_pow_trunc(geometric_poly(s), N, s);
    return poly_coeff(power, s);
}

BigRat state_probability(const LevelState& state) {
    validate(state);
    const long long N = state.particle_count();
    if (N < 1) {
        throw std::invalid_argument("state_probability: empty system");
    }
    return BigRat(configurations(state), total_configurations(N, state.top_level()));
}

std::vector<BigRat> conditional_occupancy_pmf(long long N, long long s, long long kappa) {
    check_counts(N, s, "conditional_occupancy_pmf");
    if (N < 1) {
        throw std::invalid_argument("conditional_occupancy_pmf: N must be positive");
    }
    if (kappa < 0 || kappa > s) {
        throw std::invalid_argument("conditional_occupancy_pmf: kappa out of range");
    }
    std::vector<BigInt> weight(static_cast<std::size_t>(N) + 1, BigInt(0));
    for (const LevelState& state : enumerate_level_states(N, s)) {
        const int n = state.occupancies[static_cast<std::size_t>(kappa)];
        weight[static_cast<std::size_t>(n)] += configurations(state);
    }
    const BigInt total = total_configurations(N, s);
    std::vector<BigRat> pmf;
    pmf.reserve(weight.size());
    for (const BigInt& w : weight) {
        pmf.emplace_back(w, total);
    }
    return pmf;
}

BigRat mean_occupancy(long long N, long long s, long long kappa) {
    check_counts(N, s, "mean_occupancy");
    if (N < 1) {
        throw std::invalid_argument("mean_occupancy: N must be positive");
    }
    if (kappa < 0 || kappa > s) {
        throw std::invalid_argument("mean_occupancy: kappa out of range");
    }
    if (N == 1) {
        return kappa == s ? BigRat(1) : BigRat(0);
    }
    return BigRat(N * binomial(N + s - kappa - 2, N - 2), total_configurations(N, s));
}

BigRat gf_mean_occupancy(long long N, long long s, long long kappa) {
    check_counts(N, s, "gf_mean_occupancy");
    if (N < 1) {
        throw std::invalid_argument("gf_mean_occupancy: N must be positive");
    }
    if (kappa < 0 || kappa > s) {
        throw std::invalid_argument("gf_mean_occupancy: kappa out of range");
    }
    // Coefficient of y^s in (N/C_I) y^kappa ((1-y^{s+1})/(1-y))^{N-1}, i.e.
    // the y^{s-kappa} coefficient of the power factor.
    const Poly power = poly_pow_trunc(geometric_poly(s), N - 1, s);
    return BigRat(N * poly_coeff(power, s - kappa), total_configurations(N, s));
}

DistTable level_pmf(long long N, long long s) {
    check_counts(N, s, "level_pmf");
    if (N < 1) {
        throw std::invalid_argument("level_pmf: N must be positive");
    }
    DistTable table;
    table.N = N;
    table.s = s;
    table.route = Route::levels;
    table.p.reserve(static_cast<std::size_t>(s) + 1);
    if (N == 1) {
        for (long long k = 0; k <= s; ++k) {
            table.p.emplace_back(k == s ? 1 : 0);
        }
        return table;
    }
    const BigInt total = binomial(N + s - 1, N - 1);
    for (long long k = 0; k <= s; ++k) {
        table.p.emplace_back(binomial(N + s - k - 2, N - 2), total);
    }
    return table;
}

std::vector<StateRecord> most_probable_states(long long N, long long s) {
    check_counts(N, s, "most_probable_states");
    if (N < 1) {
        throw std::invalid_argument("most_probable_states: N must be positive");
    }
    const BigInt total = total_configurations(N, s);
    BigInt best = -1;
    std::vector<StateRecord> records;
    for (const LevelState& state : enumerate_level_states(N, s)) {
        BigInt c = configurations(state);
        if (c > best) {
            best = c;
            records.clear();
        }
        if (c == best) {
            records.push_back(StateRecord{state, c, BigRat(c, total)});
        }
    }
    return records;
}

namespace {

std::string float_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const DistTable& table) {
    nlohmann::ordered_json j;
    j["N"] = table.N;
    j["s"] = table.s;
    j["route"] = route_name(table.route);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < table.p.size(); ++k) {
        nlohmann::ordered_json row;
        row["k"] = k;
        row["num"] = decimal_string(numerator(table.p[k]));
        row["den"] = decimal_string(denominator(table.p[k]));
        row["float"] = to_double(table.p[k]);
        rows.push_back(std::move(row));
    }
    j["p"] = std::move(rows);
    return j.dump();
}

std::string to_csv(const DistTable& table) {
    std::string out = "k,num,den,float\n";
    for (std::size_t k = 0; k < table.p.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += decimal_string(numerator(table.p[k]));
        out += ',';
        out += decimal_string(denominator(table.p[k]));
        out += ',';
        out += float_string(to_double(table.p[k]));
        out += '\n';
    }
    return out;
}

}  // namespace qstats
