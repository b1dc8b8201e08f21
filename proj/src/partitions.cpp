#include "qstats/partitions.hpp"

#include "qstats/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace qstats {

BigInt partition_count(long long s) {
    if (s < 0) {
        throw std::invalid_argument("partition_count: s must be nonnegative");
    }
    std::vector<BigInt> p(static_cast<std::size_t>(s) + 1);
    p[0] = 1;
    for (long long n = 1; n <= s; ++n) {
        BigInt acc = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const long long g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) != 0;
            if (plus) {
                acc += p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) {
                    acc += p[static_cast<std::size_t>(n - g2)];
                }
            } else {
                acc -= p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) {
                    acc -= p[static_cast<std::size_t>(n - g2)];
                }
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p[static_cast<std::size_t>(s)];
}

BigInt restricted_partition_count(long long s, long long max_parts) {
    if (s < 0 || max_parts < 0) {
        throw std::invalid_argument("restricted_partition_count: negative argument");
    }
    if (s == 0) {
        return 1;
    }
    if (max_parts == 0) {
        return 0;
    }
    // Partitions into at most k parts = partitions into parts of size <= k
    // (conjugation), which admits the usual 1-D sweep.
    const long long k = std::min(s, max_parts);
    std::vector<BigInt> dp(static_cast<std::size_t>(s) + 1, BigInt(0));
    dp[0] = 1;
    for (long long part = 1; part <= k; ++part) {
        for (long long n = part; n <= s; ++n) {
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - part)];
        }
    }
    return dp[static_cast<std::size_t>(s)];
}

SingularPointError::SingularPointError(long long k)
    : std::domain_error("partition_integrand: x is a zero of sin(" +
                        std::to_string(k) + "x)"),
      kappa(k) {}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;

long double integrand_ld(long long s, long double x) {
    long double prod = 1.0L;
    for (long long k = 1; k <= s; ++k) {
        prod *= std::sin((s + k) * x) / std::sin(k * x);
    }
    return prod * std::cos(static_cast<long double>(s * s - 2 * s) * x);
}

// Zeros of sin(kx), k = 1..s, inside [0, pi/2], as reduced fractions m/k of
// pi. Reducing first makes deduplication exact.
std::vector<std::pair<long long, long long>> zero_fractions(long long s) {
    std::vector<std::pair<long long, long long>> fr;
    fr.emplace_back(0, 1);
    if (s >= 2) {
        fr.emplace_back(1, 2);
    }
    for (long long k = 3; k <= s; ++k) {
        for (long long m = 1; 2 * m < k; ++m) {
            if (std::gcd(m, k) == 1) {
                fr.emplace_back(m, k);
            }
        }
    }
    std::sort(fr.begin(), fr.end(), [](const auto& a, const auto& b) {
        return a.first * b.second < b.first * a.second;
    });
    return fr;
}

struct IntegralPanel {
    long double a, b;
    long double refined;   // sum of the two half-panel estimates
    long double abs_sum;   // integral of |f| over the panel (refined nodes)
    long double err;       // |coarse - refined|
};

struct NodeTracker {
    const std::vector<long double>* zeros = nullptr;
    long double min_distance = std::numeric_limits<long double>::infinity();

    void visit(long double x) {
        auto it = std::lower_bound(zeros->begin(), zeros->end(), x);
        long double d = std::numeric_limits<long double>::infinity();
        if (it != zeros->end()) {
            d = std::min(d, *it - x);
        }
        if (it != zeros->begin()) {
            d = std::min(d, x - *(it - 1));
        }
        min_distance = std::min(min_distance, d);
    }
};

struct PanelEval {
    long double value;
    long double abs_sum;
};

PanelEval gl32_ld(long long s, long double a, long double b, NodeTracker& tracker) {
    const auto& t = gauss_legendre_32();
    const long double mid = 0.5L * (a + b);
    const long double half = 0.5L * (b - a);
    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    for (int i = 0; i < kGaussLegendreOrder; ++i) {
        const long double x = mid + half * t.node[i];
        tracker.visit(x);
        const long double fx = integrand_ld(s, x);
        sum += t.weight[i] * fx;
        abs_sum += t.weight[i] * std::fabs(fx);
    }
    return PanelEval{sum * half, abs_sum * half};
}

IntegralPanel make_integral_panel(long long s, long double a, long double b,
                                  NodeTracker& tracker) {
    const PanelEval coarse = gl32_ld(s, a, b, tracker);
    const long double mid = 0.5L * (a + b);
    const PanelEval left = gl32_ld(s, a, mid, tracker);
    const PanelEval right = gl32_ld(s, mid, b, tracker);
    IntegralPanel p;
    p.a = a;
    p.b = b;
    p.refined = left.value + right.value;
    p.abs_sum = left.abs_sum + right.abs_sum;
    p.err = std::fabs(coarse.value - p.refined);
    return p;
}

}  // namespace

double partition_integrand(long long s, double x) {
    if (s < 1) {
        throw std::invalid_argument("partition_integrand: s must be positive");
    }
    if (x < 0.0 || x > kPi / 2 || std::isnan(x)) {
        throw std::invalid_argument("partition_integrand: x outside (0, pi/2]");
    }
    double prod = 1.0;
    for (long long k = 1; k <= s; ++k) {
        const double den = std::sin(static_cast<double>(k) * x);
        if (den == 0.0) {
            throw SingularPointError(k);
        }
        prod *= std::sin(static_cast<double>(s + k) * x) / den;
    }
    return prod * std::cos(static_cast<double>(s * s - 2 * s) * x);
}

QuadReport partition_integral(long long s, long long panels_hint,
                              long long max_panels) {
    if (s < 1) {
        throw std::invalid_argument("partition_integral: s must be positive");
    }
    if (max_panels < 1) {
        throw std::invalid_argument("partition_integral: max_panels must be positive");
    }

    const auto fractions = zero_fractions(s);
    std::vector<long double> zeros;
    zeros.reserve(fractions.size());
    for (const auto& [m, k] : fractions) {
        zeros.push_back(kPiL * static_cast<long double>(m) /
                        static_cast<long double>(k));
    }

    NodeTracker tracker;
    tracker.zeros = &zeros;

    auto worse = [](const IntegralPanel& x, const IntegralPanel& y) {
        return x.err < y.err;
    };
    std::priority_queue<IntegralPanel, std::vector<IntegralPanel>, decltype(worse)>
        queue(worse);

    long double trunc_total = 0.0L;
    long double abs_total = 0.0L;
    long long panels = 0;

    auto push = [&](long double a, long double b) {
        IntegralPanel p = make_integral_panel(s, a, b, tracker);
        trunc_total += p.err;
        abs_total += p.abs_sum;
        queue.push(std::move(p));
        ++panels;
    };

    // Mandatory breaks at every zero of every sin(kx); Gauss nodes are
    // interior, so no evaluation ever lands on a singular point.
    std::vector<long double> edges = zeros;
    const long double half_pi = kPiL / 2.0L;
    if (edges.empty() || edges.back() < half_pi) {
        edges.push_back(half_pi);
    }
    while (panels_hint > static_cast<long long>(edges.size()) - 1 &&
           static_cast<long long>(edges.size()) - 1 < max_panels) {
        // Split the widest gap until the initial panel count meets the hint.
        std::size_t widest = 0;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            if (edges[i + 1] - edges[i] > edges[widest + 1] - edges[widest]) {
                widest = i;
            }
        }
        edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(widest) + 1,
                     0.5L * (edges[widest] + edges[widest + 1]));
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        push(edges[i], edges[i + 1]);
    }

    // Rounding floor: the panel sums cancel massively for large s, so the
    // achievable accuracy is bounded by eps * integral of |f|, amplified by
    // the length of the factor product.
    const long double eps = std::numeric_limits<long double>::epsilon();
    auto rounding_floor = [&]() {
        return eps * abs_total * static_cast<long double>(4 * (s + 1));
    };

    const long double target = 1e-9L;
    while (trunc_total > target && panels < max_panels &&
           trunc_total > 0.05L * rounding_floor()) {
        IntegralPanel worst = queue.top();
        queue.pop();
        trunc_total -= worst.err;
        abs_total -= worst.abs_sum;
        --panels;
        const long double mid = 0.5L * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }

    // Deterministic final summation: fixed left-to-right panel order with
    // pairwise reduction.
    std::vector<IntegralPanel> final_panels;
    final_panels.reserve(static_cast<std::size_t>(panels));
    while (!queue.empty()) {
        final_panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(final_panels.begin(), final_panels.end(),
              [](const IntegralPanel& x, const IntegralPanel& y) { return x.a < y.a; });
    std::vector<long double> values;
    values.reserve(final_panels.size());
    for (const IntegralPanel& p : final_panels) {
        values.push_back(p.refined);
    }
    while (values.size() > 1) {
        std::vector<long double> next;
        next.reserve((values.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < values.size(); i += 2) {
            next.push_back(values[i] + values[i + 1]);
        }
        if (values.size() % 2 == 1) {
            next.push_back(values.back());
        }
        values.swap(next);
    }
    const long double integral = values.empty() ? 0.0L : values.front();

    QuadReport report;
    report.value = static_cast<double>(2.0L / kPiL * integral);
    report.abs_error_estimate =
        static_cast<double>(2.0L / kPiL * (trunc_total + rounding_floor()));
    report.panels = panels;
    report.min_denominator_distance = static_cast<double>(tracker.min_distance);
    report.converged = report.abs_error_estimate < 0.4;
    return report;
}

}  // namespace qstats
