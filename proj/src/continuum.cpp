#include "qstats/continuum.hpp"

#include "qstats/rng.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

namespace qstats {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

void check_energy_system(const EnergySystem& sys, const char* where) {
    if (sys.N < 1) {
        throw std::invalid_argument(std::string(where) + ": N must be positive");
    }
    if (!(sys.E > 0.0)) {
        throw std::invalid_argument(std::string(where) + ": E must be positive");
    }
}

double factorial_double(long long n) {
    double f = 1.0;
    for (long long i = 2; i <= n; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

}  // namespace

double to_double(const BigRat& value) {
    const Float50 num(numerator(value));
    const Float50 den(denominator(value));
    return static_cast<double>(num / den);
}

double to_double(const BigInt& value) {
    return static_cast<double>(Float50(value));
}

Moments moments(long long N, long long s) {
    if (N < 1 || s < 0) {
        throw std::invalid_argument("moments: require N >= 1 and s >= 0");
    }
    Moments m;
    m.mean = BigRat(s, N);
    m.second = BigRat(N - 1, N + 1) * m.mean + BigRat(2 * N, N + 1) * m.mean * m.mean;
    m.variance = m.second - m.mean * m.mean;
    return m;
}

double geometric_limit_pmf(double mean_quanta, double kappa) {
    if (!(mean_quanta > 0.0)) {
        throw std::invalid_argument("geometric_limit_pmf: mean must be positive");
    }
    if (kappa < 0.0) {
        throw std::invalid_argument("geometric_limit_pmf: kappa must be nonnegative");
    }
    return std::exp(-kappa / mean_quanta) / mean_quanta;
}

std::vector<ConvergenceRow> limit_convergence(const BigRat& mean_quanta,
                                              long long base_N,
                                              const std::vector<long long>& scales) {
    if (!(mean_quanta > 0)) {
        throw std::invalid_argument("limit_convergence: mean must be positive");
    }
    if (base_N < 1) {
        throw std::invalid_argument("limit_convergence: base_N must be positive");
    }
    const double mean = to_double(mean_quanta);
    const double ratio = std::exp(-1.0 / mean);
    std::vector<ConvergenceRow> rows;
    rows.reserve(scales.size());
    for (long long m : scales) {
        if (m < 1) {
            throw std::invalid_argument("limit_convergence: scales must be positive");
        }
        const long long N = m * base_N;
        if (N < 2) {
            throw std::invalid_argument("limit_convergence: N = 1 is degenerate");
        }
        const BigRat s_exact = mean_quanta * N;
        if (denominator(s_exact) != 1) {
            throw std::invalid_argument(
                "limit_convergence: mean_quanta * N must be an integer");
        }
        const long long s = static_cast<long long>(numerator(s_exact));

        const DistTable table = level_pmf(N, s);
        double l1 = 0.0;
        for (long long k = 0; k <= s; ++k) {
            const double g = (1.0 - ratio) * std::pow(ratio, static_cast<double>(k));
            l1 += std::fabs(to_double(table.p[static_cast<std::size_t>(k)]) - g);
        }
        // Comparator mass beyond kappa = s.
        l1 += std::pow(ratio, static_cast<double>(s + 1));
        rows.push_back(ConvergenceRow{m, N, s, 0.5 * l1});
    }
    return rows;
}

double hyperplane_area(const EnergySystem& sys) {
    check_energy_system(sys, "hyperplane_area");
    const long long N = sys.N;
    if (N <= 18) {
        // (N-1)! and E^{N-1} are exact / well within double range here.
        return std::sqrt(static_cast<double>(N)) *
               std::pow(sys.E, static_cast<double>(N - 1)) / factorial_double(N - 1);
    }
    const double log_area = 0.5 * std::log(static_cast<double>(N)) +
                            static_cast<double>(N - 1) * std::log(sys.E) -
                            std::lgamma(static_cast<double>(N));
    return std::exp(log_area);
}

double zone_area_density(const EnergySystem& sys, double eps) {
    check_energy_system(sys, "zone_area_density");
    if (sys.N < 2) {
        throw std::invalid_argument("zone_area_density: N must be at least 2");
    }
    if (eps < 0.0 || eps > sys.E || std::isnan(eps)) {
        throw std::invalid_argument("zone_area_density: eps outside [0, E]");
    }
    const long long N = sys.N;
    if (N <= 20) {
        return std::sqrt(static_cast<double>(N)) *
               std::pow(sys.E - eps, static_cast<double>(N - 2)) /
               factorial_double(N - 2);
    }
    if (eps == sys.E) {
        return 0.0;
    }
    const double log_density = 0.5 * std::log(static_cast<double>(N)) +
                               static_cast<double>(N - 2) * std::log(sys.E - eps) -
                               std::lgamma(static_cast<double>(N - 1));
    return std::exp(log_density);
}

double finite_n_energy_pdf(const EnergySystem& sys, double eps) {
    check_energy_system(sys, "finite_n_energy_pdf");
    if (sys.N < 2) {
        throw std::invalid_argument("finite_n_energy_pdf: N must be at least 2");
    }
    if (eps < 0.0 || eps > sys.E || std::isnan(eps)) {
        throw std::invalid_argument("finite_n_energy_pdf: eps outside [0, E]");
    }
    const double scale = static_cast<double>(sys.N - 1) / sys.E;
    if (sys.N == 2) {
        return scale;  // uniform on [0, E]
    }
    if (eps == sys.E) {
        return 0.0;
    }
    // log-domain keeps (1 - eps/E)^{N-2} alive for large N.
    return scale * std::exp(static_cast<double>(sys.N - 2) * std::log1p(-eps / sys.E));
}

double boltzmann_pdf(double mean_energy, double eps) {
    if (!(mean_energy > 0.0)) {
        throw std::invalid_argument("boltzmann_pdf: mean energy must be positive");
    }
    if (eps < 0.0) {
        throw std::invalid_argument("boltzmann_pdf: eps must be nonnegative");
    }
    return std::exp(-eps / mean_energy) / mean_energy;
}

std::vector<double> sample_energy_simplex(const EnergySystem& sys,
                                          std::mt19937_64& rng) {
    check_energy_system(sys, "sample_energy_simplex");
    if (sys.N < 2) {
        throw std::invalid_argument("sample_energy_simplex: N must be at least 2");
    }
    std::vector<double> eps(static_cast<std::size_t>(sys.N));
    double sum = 0.0;
    for (double& g : eps) {
        g = unit_exponential(rng);
        sum += g;
    }
    for (double& g : eps) {
        g = sys.E * (g / sum);
    }
    return eps;
}

}  // namespace qstats
