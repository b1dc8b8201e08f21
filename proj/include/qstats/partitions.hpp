#pragma once

#include "qstats/exactnum.hpp"

#include <stdexcept>

namespace qstats {

// Result of a numerical evaluation of the harmonic partition integral.
// min_denominator_distance is the distance from the nearest quadrature node
// to the nearest zero of any sin(kx) factor; the panel construction keeps it
// strictly positive.
struct QuadReport {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long long panels = 0;
    double min_denominator_distance = 0.0;
    bool converged = false;
};

/// p_s, the number of integer partitions of s (pentagonal recurrence, exact).
BigInt partition_count(long long s);

/// Partitions of s into at most max_parts parts. Equals the level-picture
/// state count S_I when max_parts = N.
BigInt restricted_partition_count(long long s, long long max_parts);

// Thrown when the integrand is evaluated exactly on a zero of sin(kappa*x).
struct SingularPointError : std::domain_error {
    explicit SingularPointError(long long k);
    long long kappa;
};

/// Integrand of the harmonic representation of p_s at x in (0, pi/2]:
/// prod_{k=1..s} sin((s+k)x)/sin(kx) * cos((s^2-2s)x), each factor evaluated
/// independently in double precision.
double partition_integrand(long long s, double x);

/// (2/pi) * integral over (0, pi/2) of the integrand above, by adaptive
/// Gauss-Legendre quadrature with mandatory panel breaks at every zero of
/// every sin(kx). A report with converged=false is returned when the error
/// estimate cannot be brought below 0.4; the value is never silently wrong.
QuadReport partition_integral(long long s, long long panels_hint = 0,
                              long long max_panels = 40000);

}  // namespace qstats
