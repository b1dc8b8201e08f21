// quanta-stats: exact occupancy statistics of s energy quanta among N
// particles, computed by both counting routes, with partition integrals,
// samplers and continuum-limit tables. Output is deterministic: identical
// configuration (including seed) gives byte-identical files.

#include "qstats/continuum.hpp"
#include "qstats/occupancy.hpp"
#include "qstats/partitions.hpp"
#include "qstats/quadrature.hpp"
#include "qstats/quanta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace qstats;

constexpr const char* kSchema = "quanta-stats/1";

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct RunConfig {
    long long N = 0;
    long long s = 0;
    double E = 0.0;
    std::string mean = "1";
    std::uint64_t seed = 0;
    std::uint64_t draws = 1'000'000;
    long long ladder = 4;
    long long base = 10;
    long long panels = 0;
    long long points = 121;
    long long nmax = 12;
    long long smax = 12;
    long long gfmax = 8;
    std::string route = "levels";
    std::string format = "csv";
    std::string out;
};

std::string float_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

unsigned thread_cap() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QUANTA_STATS_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) {
            cap = static_cast<unsigned>(std::min<unsigned long>(cap, v));
        }
    }
    return cap;
}

int emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file " << cfg.out << "\n";
        return kExitUsage;
    }
    file << payload;
    return kExitOk;
}

ordered_json dist_json(const DistTable& table) {
    return ordered_json::parse(to_json(table));
}

// Upper chi-square quantile at alpha = 0.001 (Wilson-Hilferty).
double chi2_critical_1e3(double dof) {
    const double z = 3.0902323061678132;  // standard normal quantile at 0.999
    const double t = 1.0 - 2.0 / (9.0 * dof) + z * std::sqrt(2.0 / (9.0 * dof));
    return dof * t * t * t;
}

int cmd_dist(const RunConfig& cfg) {
    const DistTable levels = level_pmf(cfg.N, cfg.s);
    const DistTable quanta = quanta_pmf(cfg.N, cfg.s);
    const bool equal = levels == quanta;
    std::string payload;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "dist";
        j["N"] = cfg.N;
        j["s"] = cfg.s;
        j["routes_equal"] = equal;
        j["levels"] = dist_json(levels);
        j["quanta"] = dist_json(quanta);
        payload = j.dump(2) + "\n";
    } else {
        payload = to_csv(levels);
        payload += std::string("# routes_equal=") + (equal ? "true" : "false") + "\n";
    }
    const int rc = emit(cfg, payload);
    if (rc != kExitOk) {
        return rc;
    }
    return equal ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(const RunConfig& cfg) {
    std::string payload;
    if (cfg.route == "quanta") {
        const auto comps = enumerate_compositions(cfg.N, cfg.s);
        const BigInt total = count_states(cfg.N, cfg.s);
        const BigRat uniform(1, total);
        if (cfg.format == "json") {
            ordered_json j;
            j["schema"] = kSchema;
            j["command"] = "enumerate";
            j["route"] = "quanta";
            j["N"] = cfg.N;
            j["s"] = cfg.s;
            j["count"] = decimal_string(total);
            ordered_json rows = ordered_json::array();
            for (const auto& c : comps) {
                ordered_json row;
                row["kappa"] = c.quanta;
                row["num"] = decimal_string(numerator(uniform));
                row["den"] = decimal_string(denominator(uniform));
                row["float"] = to_double(uniform);
                rows.push_back(std::move(row));
            }
            j["states"] = std::move(rows);
            payload = j.dump(2) + "\n";
        } else {
            for (long long i = 1; i <= cfg.N; ++i) {
                payload += "k" + std::to_string(i) + ",";
            }
            payload += "num,den,float\n";
            for (const auto& c : comps) {
                for (int v : c.quanta) {
                    payload += std::to_string(v) + ",";
                }
                payload += decimal_string(numerator(uniform)) + "," +
                           decimal_string(denominator(uniform)) + "," +
                           float_string(to_double(uniform)) + "\n";
            }
        }
    } else {
        const auto states = enumerate_level_states(cfg.N, cfg.s);
        if (cfg.format == "json") {
            ordered_json j;
            j["schema"] = kSchema;
            j["command"] = "enumerate";
            j["route"] = "levels";
            j["N"] = cfg.N;
            j["s"] = cfg.s;
            j["count"] = states.size();
            ordered_json rows = ordered_json::array();
            for (const auto& st : states) {
                const BigRat p = state_probability(st);
                ordered_json row;
                row["n"] = st.occupancies;
                row["configurations"] = decimal_string(configurations(st));
                row["num"] = decimal_string(numerator(p));
                row["den"] = decimal_string(denominator(p));
                row["float"] = to_double(p);
                rows.push_back(std::move(row));
            }
            j["states"] = std::move(rows);
            payload = j.dump(2) + "\n";
        } else {
            for (long long k = 0; k <= cfg.s; ++k) {
                payload += "n" + std::to_string(k) + ",";
            }
            payload += "configurations,num,den,float\n";
            for (const auto& st : states) {
                for (int v : st.occupancies) {
                    payload += std::to_string(v) + ",";
                }
                const BigRat p = state_probability(st);
                payload += decimal_string(configurations(st)) + "," +
                           decimal_string(numerator(p)) + "," +
                           decimal_string(denominator(p)) + "," +
                           float_string(to_double(p)) + "\n";
            }
        }
    }
    return emit(cfg, payload);
}

int cmd_partition(const RunConfig& cfg) {
    const BigInt exact = partition_count(cfg.s);
    const QuadReport report = partition_integral(cfg.s, cfg.panels);
    std::string payload;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "partition";
        j["s"] = cfg.s;
        j["exact"] = decimal_string(exact);
        j["value"] = report.value;
        j["abs_error_estimate"] = report.abs_error_estimate;
        j["panels"] = report.panels;
        j["min_denominator_distance"] = report.min_denominator_distance;
        j["converged"] = report.converged;
        payload = j.dump(2) + "\n";
    } else {
        payload =
            "s,exact,value,abs_error_estimate,panels,min_denominator_distance,converged\n";
        payload += std::to_string(cfg.s) + "," + decimal_string(exact) + "," +
                   float_string(report.value) + "," +
                   float_string(report.abs_error_estimate) + "," +
                   std::to_string(report.panels) + "," +
                   float_string(report.min_denominator_distance) + "," +
                   (report.converged ? "true" : "false") + "\n";
    }
    const int rc = emit(cfg, payload);
    if (rc != kExitOk) {
        return rc;
    }
    return report.converged ? kExitOk : kExitNoConvergence;
}

int cmd_sample(const RunConfig& cfg) {
    const SampleStats stats =
        sample_histogram(cfg.N, cfg.s, cfg.draws, cfg.seed, thread_cap());
    const DistTable pmf = quanta_pmf(cfg.N, cfg.s);

    // Chi-square of the first-slot marginal against p(kappa); the pooled
    // counts are correlated within a draw, so they are reported untested.
    double chi2 = 0.0;
    for (long long k = 0; k <= cfg.s; ++k) {
        const double expected =
            static_cast<double>(cfg.draws) * to_double(pmf.p[static_cast<std::size_t>(k)]);
        const double observed =
            static_cast<double>(stats.slot1[static_cast<std::size_t>(k)]);
        if (expected > 0.0) {
            chi2 += (observed - expected) * (observed - expected) / expected;
        }
    }
    const double dof = static_cast<double>(cfg.s);
    const double critical = dof > 0 ? chi2_critical_1e3(dof) : 0.0;
    const bool chi2_pass = dof > 0 ? chi2 < critical : true;

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "sample";
        j["N"] = cfg.N;
        j["s"] = cfg.s;
        ordered_json stats_json = ordered_json::parse(to_json(stats));
        for (auto& [key, value] : stats_json.items()) {
            j[key] = value;
        }
        ordered_json chi;
        chi["statistic"] = chi2;
        chi["dof"] = dof;
        chi["critical_alpha_0.001"] = critical;
        chi["pass"] = chi2_pass;
        j["chi_square"] = std::move(chi);
        payload = j.dump(2) + "\n";
    } else {
        payload = "k,count,slot1,expected_num,expected_den,expected_float\n";
        for (long long k = 0; k <= cfg.s; ++k) {
            const BigRat expected =
                BigRat(cfg.draws) * BigRat(cfg.N) * pmf.p[static_cast<std::size_t>(k)];
            payload += std::to_string(k) + "," +
                       std::to_string(stats.hist[static_cast<std::size_t>(k)]) + "," +
                       std::to_string(stats.slot1[static_cast<std::size_t>(k)]) + "," +
                       decimal_string(numerator(expected)) + "," +
                       decimal_string(denominator(expected)) + "," +
                       float_string(to_double(expected)) + "\n";
        }
        payload += "# seed=" + std::to_string(stats.seed) + "\n";
        payload += "# draws=" + std::to_string(stats.draws) + "\n";
        payload += "# chi_square=" + float_string(chi2) + "\n";
        payload += "# chi_square_dof=" + float_string(dof) + "\n";
        payload += "# chi_square_critical_alpha_0.001=" + float_string(critical) + "\n";
        payload +=
            std::string("# chi_square_pass=") + (chi2_pass ? "true" : "false") + "\n";
    }
    return emit(cfg, payload);
}

int cmd_limit(const RunConfig& cfg) {
    const BigRat mean = bigrat_from_fraction(cfg.mean);
    if (cfg.ladder < 1 || cfg.ladder > 40) {
        throw std::invalid_argument("limit: ladder must be between 1 and 40");
    }
    std::vector<long long> scales;
    for (long long i = 0, m = 1; i < cfg.ladder; ++i, m *= 2) {
        scales.push_back(m);
    }
    const auto rows = limit_convergence(mean, cfg.base, scales);
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        decreasing = decreasing && rows[i].tv_distance < rows[i - 1].tv_distance;
    }
    std::string payload;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "limit";
        j["mean"] = fraction_string(mean);
        j["base"] = cfg.base;
        ordered_json table = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["scale"] = row.scale;
            r["N"] = row.N;
            r["s"] = row.s;
            r["tv"] = row.tv_distance;
            table.push_back(std::move(r));
        }
        j["rows"] = std::move(table);
        j["strictly_decreasing"] = decreasing;
        payload = j.dump(2) + "\n";
    } else {
        payload = "scale,N,s,tv\n";
        for (const auto& row : rows) {
            payload += std::to_string(row.scale) + "," + std::to_string(row.N) + "," +
                       std::to_string(row.s) + "," + float_string(row.tv_distance) + "\n";
        }
        payload += std::string("# strictly_decreasing=") +
                   (decreasing ? "true" : "false") + "\n";
    }
    return emit(cfg, payload);
}

int cmd_continuum(const RunConfig& cfg) {
    const EnergySystem sys{cfg.N, cfg.E};
    if (cfg.points < 2) {
        throw std::invalid_argument("continuum: need at least 2 grid points");
    }
    const double mean = sys.mean_energy();
    const double hi = std::min(cfg.E, 3.0 * mean);
    const double area = hyperplane_area(sys);
    const AdaptiveQuad zone = integrate_adaptive(
        [&sys](double e) { return zone_area_density(sys, e); }, 0.0, cfg.E, 0.0,
        1e-13);

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "continuum";
        j["N"] = cfg.N;
        j["E"] = cfg.E;
        ordered_json rows = ordered_json::array();
        for (long long i = 0; i < cfg.points; ++i) {
            const double eps =
                hi * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
            ordered_json r;
            r["eps"] = eps;
            r["pdf_finite"] = finite_n_energy_pdf(sys, eps);
            r["pdf_boltzmann"] = boltzmann_pdf(mean, eps);
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        ordered_json geometry;
        geometry["hyperplane_area"] = area;
        geometry["zone_integral"] = zone.value;
        geometry["relative_gap"] = std::fabs(zone.value - area) / area;
        j["geometry"] = std::move(geometry);
        payload = j.dump(2) + "\n";
    } else {
        payload = "eps,pdf_finite,pdf_boltzmann\n";
        for (long long i = 0; i < cfg.points; ++i) {
            const double eps =
                hi * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
            payload += float_string(eps) + "," +
                       float_string(finite_n_energy_pdf(sys, eps)) + "," +
                       float_string(boltzmann_pdf(mean, eps)) + "\n";
        }
        payload += "# hyperplane_area=" + float_string(area) + "\n";
        payload += "# zone_integral=" + float_string(zone.value) + "\n";
    }
    return emit(cfg, payload);
}

int cmd_check(const RunConfig& cfg) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "check";
    j["nmax"] = cfg.nmax;
    j["smax"] = cfg.smax;
    j["gf_nmax"] = cfg.gfmax;

    bool pass = true;
    ordered_json route_failures = ordered_json::array();
    long long route_cases = 0;
    for (long long N = 1; N <= cfg.nmax; ++N) {
        for (long long s = 0; s <= cfg.smax; ++s) {
            ++route_cases;
            const RouteCheck check = cross_route_check(N, s);
            if (!check.pass()) {
                pass = false;
                ordered_json f;
                f["N"] = N;
                f["s"] = s;
                f["totals_equal"] = check.totals_equal;
                f["mismatched_levels"] = check.mismatched_levels;
                route_failures.push_back(std::move(f));
            }
        }
    }
    j["route_checks"] = {{"cases", route_cases}, {"failures", route_failures}};

    ordered_json moment_failures = ordered_json::array();
    long long moment_cases = 0;
    for (long long N = 1; N <= cfg.nmax; ++N) {
        for (long long s = 0; s <= cfg.smax; ++s) {
            ++moment_cases;
            const Moments m = moments(N, s);
            const DistTable pmf = level_pmf(N, s);
            BigRat mean = 0, second = 0;
            for (long long k = 0; k <= s; ++k) {
                mean += BigRat(k) * pmf.p[static_cast<std::size_t>(k)];
                second += BigRat(k * k) * pmf.p[static_cast<std::size_t>(k)];
            }
            if (m.mean != mean || m.second != second ||
                m.variance != second - mean * mean) {
                pass = false;
                moment_failures.push_back({{"N", N}, {"s", s}});
            }
        }
    }
    j["moment_checks"] = {{"cases", moment_cases}, {"failures", moment_failures}};

    ordered_json gf_failures = ordered_json::array();
    long long gf_cases = 0;
    for (long long N = 1; N <= cfg.gfmax; ++N) {
        for (long long s = 0; s <= cfg.gfmax; ++s) {
            ++gf_cases;
            const BigInt closed = total_configurations(N, s);
            BigInt summed = 0;
            const auto states = enumerate_level_states(N, s);
            for (const auto& st : states) {
                summed += configurations(st);
            }
            bool ok = closed == gf_total_configurations(N, s) && closed == summed;
            for (long long k = 0; ok && k <= s; ++k) {
                const BigRat m = mean_occupancy(N, s, k);
                if (m != gf_mean_occupancy(N, s, k)) {
                    ok = false;
                    break;
                }
                BigRat from_states = 0;
                for (const auto& st : states) {
                    from_states += BigRat(st.occupancies[static_cast<std::size_t>(k)]) *
                                   state_probability(st);
                }
                if (m != from_states) {
                    ok = false;
                }
            }
            if (!ok) {
                pass = false;
                gf_failures.push_back({{"N", N}, {"s", s}});
            }
        }
    }
    j["gf_checks"] = {{"cases", gf_cases}, {"failures", gf_failures}};

    // Informational: states tied for the maximum configuration count, the
    // reason "most probable state" is ill-defined at finite size.
    ordered_json ties = ordered_json::array();
    for (long long N = 1; N <= std::min<long long>(cfg.nmax, 12); ++N) {
        for (long long s = 0; s <= std::min<long long>(cfg.smax, 12); ++s) {
            const auto records = most_probable_states(N, s);
            if (records.size() > 1) {
                ties.push_back({{"N", N}, {"s", s}, {"tied_states", records.size()}});
            }
        }
    }
    j["ties"] = std::move(ties);
    j["pass"] = pass;

    const int rc = emit(cfg, j.dump(2) + "\n");
    if (rc != kExitOk) {
        return rc;
    }
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact statistics of s energy quanta among N particles"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_output = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "Output path (default stdout)");
    };

    CLI::App* dist = app.add_subcommand("dist", "p(kappa) by both routes");
    dist->add_option("--N", cfg.N, "Number of particles")->required();
    dist->add_option("--s", cfg.s, "Number of quanta")->required();
    add_output(dist);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "List level states or compositions");
    enumerate->add_option("--N", cfg.N, "Number of particles")->required();
    enumerate->add_option("--s", cfg.s, "Number of quanta")->required();
    enumerate->add_option("--route", cfg.route, "levels or quanta")
        ->check(CLI::IsMember({"levels", "quanta"}));
    add_output(enumerate);

    CLI::App* partition =
        app.add_subcommand("partition", "Exact p_s and its harmonic integral");
    partition->add_option("--s", cfg.s, "Number to partition")->required();
    partition->add_option("--panels", cfg.panels, "Initial panel count hint");
    add_output(partition);

    CLI::App* sample =
        app.add_subcommand("sample", "Histogram of uniform state draws");
    sample->add_option("--N", cfg.N, "Number of particles")->required();
    sample->add_option("--s", cfg.s, "Number of quanta")->required();
    sample->add_option("--draws", cfg.draws, "Number of draws");
    sample->add_option("--seed", cfg.seed, "RNG seed");
    add_output(sample);

    CLI::App* limit =
        app.add_subcommand("limit", "TV distance to the geometric limit law");
    limit->add_option("--mean", cfg.mean,
                      "Mean quanta per particle (integer or a/b)");
    limit->add_option("--base", cfg.base, "Base particle count");
    limit->add_option("--ladder", cfg.ladder, "Number of doubling rungs");
    add_output(limit);

    CLI::App* continuum =
        app.add_subcommand("continuum", "Finite-N energy pdf vs Boltzmann law");
    continuum->add_option("--N", cfg.N, "Number of particles")->required();
    continuum->add_option("--E", cfg.E, "Total energy")->required();
    continuum->add_option("--points", cfg.points, "Grid points");
    add_output(continuum);

    CLI::App* check = app.add_subcommand("check", "Cross-route and identity sweep");
    check->add_option("--nmax", cfg.nmax, "Largest N in the sweep");
    check->add_option("--smax", cfg.smax, "Largest s in the sweep");
    check->add_option("--gfmax", cfg.gfmax, "Largest N,s for the enumeration sweep");
    check->add_option("--out", cfg.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dist->parsed()) {
            return cmd_dist(cfg);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(cfg);
        }
        if (partition->parsed()) {
            return cmd_partition(cfg);
        }
        if (sample->parsed()) {
            return cmd_sample(cfg);
        }
        if (limit->parsed()) {
            return cmd_limit(cfg);
        }
        if (continuum->parsed()) {
            return cmd_continuum(cfg);
        }
        if (check->parsed()) {
            return cmd_check(cfg);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
