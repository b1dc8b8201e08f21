#include "qstats/quanta.hpp"

#include "qstats/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

namespace qstats {

long long Composition::total() const {
    long long t = 0;
    for (int v : quanta) {
        t += v;
    }
    return t;
}

std::uint64_t SampleStats::total_count() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : hist) {
        t += c;
    }
    return t;
}

namespace {

void check_system(long long N, long long s, const char* where) {
    if (N < 1) {
        throw std::invalid_argument(std::string(where) + ": N must be positive");
    }
    if (s < 0) {
        throw std::invalid_argument(std::string(where) + ": s must be nonnegative");
    }
    if (N > std::numeric_limits<int>::max() || s > std::numeric_limits<int>::max()) {
        throw std::invalid_argument(std::string(where) + ": argument too large");
    }
}

void descend_compositions(long long N, long long slot, long long left,
                          std::vector<int>& prefix, std::vector<Composition>& out) {
    if (slot == N - 1) {
        prefix.push_back(static_cast<int>(left));
        out.push_back(Composition{prefix});
        prefix.pop_back();
        return;
    }
    for (long long k = 0; k <= left; ++k) {
        prefix.push_back(static_cast<int>(k));
        descend_compositions(N, slot + 1, left - k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

BigInt count_states(long long N, long long s) {
    check_system(N, s, "count_states");
    return binomial(N + s - 1, s);
}

std::vector<Composition> enumerate_compositions(long long N, long long s) {
    check_system(N, s, "enumerate_compositions");
    const BigInt count = count_states(N, s);
    if (count > kEnumerationCap) {
        throw std::length_error("enumerate_compositions: " + count.str() +
                                " states exceeds the enumeration cap");
    }
    std::vector<Composition> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(N));
    descend_compositions(N, 0, s, prefix, out);
    return out;
}

BigInt count_states_with_level(long long N, long long s, long long kappa) {
    check_system(N, s, "count_states_with_level");
    if (N < 2) {
        throw std::invalid_argument("count_states_with_level: N must be at least 2");
    }
    if (kappa < 0 || kappa > s) {
        throw std::invalid_argument("count_states_with_level: kappa out of range");
    }
    return binomial(N + s - kappa - 2, s - kappa);
}

DistTable quanta_pmf(long long N, long long s) {
    check_system(N, s, "quanta_pmf");
    DistTable table;
    table.N = N;
    table.s = s;
    table.route = Route::quanta;
    table.p.reserve(static_cast<std::size_t>(s) + 1);
    if (N == 1) {
        for (long long k = 0; k <= s; ++k) {
            table.p.emplace_back(k == s ? 1 : 0);
        }
        return table;
    }
    const BigInt total = count_states(N, s);
    for (long long k = 0; k <= s; ++k) {
        table.p.emplace_back(count_states_with_level(N, s, k), total);
    }
    return table;
}

Composition sample_state(long long N, long long s, std::mt19937_64& rng) {
    check_system(N, s, "sample_state");
    if (N == 1) {
        return Composition{{static_cast<int>(s)}};
    }
    // Floyd's algorithm: a uniform (N-1)-subset of {1, ..., N+s-1}.
    const std::uint64_t slots = static_cast<std::uint64_t>(N + s - 1);
    const std::uint64_t bars = static_cast<std::uint64_t>(N - 1);
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = slots - bars + 1; j <= slots; ++j) {
        const std::uint64_t t = 1 + bounded_uniform(rng, j);
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    Composition c;
    c.quanta.reserve(static_cast<std::size_t>(N));
    std::uint64_t prev = 0;
    for (std::uint64_t bar : chosen) {
        c.quanta.push_back(static_cast<int>(bar - prev - 1));
        prev = bar;
    }
    c.quanta.push_back(static_cast<int>(slots - prev));
    return c;
}

SampleStats sample_histogram(long long N, long long s, std::uint64_t draws,
                             std::uint64_t seed, unsigned threads) {
    check_system(N, s, "sample_histogram");
    constexpr std::uint64_t kBlock = 1 << 16;
    const std::uint64_t blocks = (draws + kBlock - 1) / kBlock;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(blocks, 1)));

    const std::size_t levels = static_cast<std::size_t>(s) + 1;
    std::vector<std::vector<std::uint64_t>> partial(
        threads, std::vector<std::uint64_t>(levels, 0));
    std::vector<std::vector<std::uint64_t>> partial_slot1(
        threads, std::vector<std::uint64_t>(levels, 0));
    std::atomic<std::uint64_t> next_block{0};

    auto worker = [&](unsigned tid) {
        auto& hist = partial[tid];
        auto& first = partial_slot1[tid];
        for (;;) {
            const std::uint64_t b = next_block.fetch_add(1);
            if (b >= blocks) {
                return;
            }
            // Fixed per-block seed: the result does not depend on how blocks
            // are assigned to threads.
            std::mt19937_64 rng(splitmix64(seed ^ splitmix64(b)));
            const std::uint64_t begin = b * kBlock;
            const std::uint64_t end = std::min(draws, begin + kBlock);
            for (std::uint64_t i = begin; i < end; ++i) {
                const Composition c = sample_state(N, s, rng);
                ++first[static_cast<std::size_t>(c.quanta.front())];
                for (int k : c.quanta) {
                    ++hist[static_cast<std::size_t>(k)];
                }
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    SampleStats stats;
    stats.draws = draws;
    stats.seed = seed;
    stats.hist.assign(levels, 0);
    stats.slot1.assign(levels, 0);
    for (unsigned t = 0; t < threads; ++t) {
        for (std::size_t k = 0; k < levels; ++k) {
            stats.hist[k] += partial[t][k];
            stats.slot1[k] += partial_slot1[t][k];
        }
    }
    return stats;
}

RouteCheck cross_route_check(long long N, long long s) {
    check_system(N, s, "cross_route_check");
    RouteCheck report;
    report.N = N;
    report.s = s;
    report.totals_equal = total_configurations(N, s) == count_states(N, s);
    const DistTable levels = level_pmf(N, s);
    const DistTable quanta = quanta_pmf(N, s);
    report.pmf_equal = true;
    for (long long k = 0; k <= s; ++k) {
        if (levels.p[static_cast<std::size_t>(k)] != quanta.p[static_cast<std::size_t>(k)]) {
            report.pmf_equal = false;
            report.mismatched_levels.push_back(k);
        }
    }
    return report;
}

std::string to_json(const SampleStats& stats) {
    nlohmann::ordered_json j;
    j["seed"] = stats.seed;
    j["draws"] = stats.draws;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < stats.hist.size(); ++k) {
        nlohmann::ordered_json row;
        row["k"] = k;
        row["count"] = stats.hist[k];
        if (k < stats.slot1.size()) {
            row["slot1"] = stats.slot1[k];
        }
        rows.push_back(std::move(row));
    }
    j["hist"] = std::move(rows);
    return j.dump();
}

}  // namespace qstats
