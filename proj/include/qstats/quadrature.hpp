#pragma once

#include <array>
#include <functional>

namespace qstats {

inline constexpr int kGaussLegendreOrder = 32;

// Nodes and weights of 32-point Gauss-Legendre quadrature on [-1, 1],
// computed once by Newton iteration on the Legendre recurrence.
struct GaussLegendreTable {
    std::array<long double, kGaussLegendreOrder> node;
    std::array<long double, kGaussLegendreOrder> weight;
};

const GaussLegendreTable& gauss_legendre_32();

struct AdaptiveQuad {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long long panels = 0;
    bool converged = false;
};

/// Adaptive panel integration of f over [a, b]. Panels are bisected, worst
/// first, until the panel-split error estimate drops below
/// abs_tol + rel_tol*|value| or max_panels is reached.
AdaptiveQuad integrate_adaptive(const std::function<double(double)>& f,
                                double a, double b, double abs_tol,
                                double rel_tol, long long max_panels = 4096);

}  // namespace qstats
