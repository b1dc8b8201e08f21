#pragma once

#include "qstats/exactnum.hpp"
#include "qstats/occupancy.hpp"

#include <random>
#include <vector>

namespace qstats {

// Moments of p(kappa), kept exact.
struct Moments {
    BigRat mean;      // <kappa> = s/N
    BigRat second;    // <kappa^2>
    BigRat variance;  // second - mean^2
};

// A classical system of N particles sharing continuous energy E.
struct EnergySystem {
    long long N = 0;
    double E = 0.0;

    double mean_energy() const { return E / static_cast<double>(N); }
};

/// Exact rational -> nearest double. Goes through a 50-digit float so the
/// result is within 1 ulp of the correctly rounded quotient even when
/// numerator and denominator overflow double on their own.
double to_double(const BigRat& value);
double to_double(const BigInt& value);

/// Closed-form <kappa>, <kappa^2> and variance:
/// <kappa^2> = (N-1)/(N+1) <kappa> + 2N/(N+1) <kappa>^2.
Moments moments(long long N, long long s);

/// Density of the s -> infinity limit law (1/<kappa>) exp(-kappa/<kappa>).
double geometric_limit_pmf(double mean_quanta, double kappa);

struct ConvergenceRow {
    long long scale = 0;
    long long N = 0;
    long long s = 0;
    double tv_distance = 0.0;
};

/// Total-variation distance between the exact p(kappa) and the normalized
/// geometric comparator with ratio exp(-1/<kappa>), along the ladder
/// N = scale * base_N, s = mean_quanta * N. Every s must come out integral.
std::vector<ConvergenceRow> limit_convergence(const BigRat& mean_quanta,
                                              long long base_N,
                                              const std::vector<long long>& scales);

/// Surface area of the energy hyperplane: sqrt(N) E^{N-1} / (N-1)!.
double hyperplane_area(const EnergySystem& sys);

/// Area density of the hyperzone at particle energy eps:
/// sqrt(N) (E-eps)^{N-2} / (N-2)!. Requires N >= 2 and 0 <= eps <= E.
double zone_area_density(const EnergySystem& sys, double eps);

/// Energy density of one particle at finite N:
/// P(eps) = (N-1)/E (1 - eps/E)^{N-2} = zone_area_density / hyperplane_area.
double finite_n_energy_pdf(const EnergySystem& sys, double eps);

/// Boltzmann law (1/<eps>) exp(-eps/<eps>).
double boltzmann_pdf(double mean_energy, double eps);

/// One point uniform on the simplex eps_1 + ... + eps_N = E, via normalized
/// standard-exponential draws.
std::vector<double> sample_energy_simplex(const EnergySystem& sys,
                                          std::mt19937_64& rng);

}  // namespace qstats
