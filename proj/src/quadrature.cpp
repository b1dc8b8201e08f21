#include "qstats/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace qstats {

namespace {

GaussLegendreTable build_table() {
    GaussLegendreTable t{};
    const int n = kGaussLegendreOrder;
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Root of P_n near cos(pi*(i+3/4)/(n+1/2)), polished by Newton.
        long double z = std::cos(pi * (i + 0.75L) / (n + 0.5L));
        long double pp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p1 = 1.0L;
            long double p2 = 0.0L;
            for (int j = 1; j <= n; ++j) {
                const long double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0L);
            const long double next = z - p1 / pp;
            if (next == z) {
                break;
            }
            z = next;
        }
        t.node[i] = -z;
        t.node[n - 1 - i] = z;
        t.weight[i] = t.weight[n - 1 - i] = 2.0L / ((1.0L - z * z) * pp * pp);
    }
    return t;
}

}  // namespace

const GaussLegendreTable& gauss_legendre_32() {
    static const GaussLegendreTable table = build_table();
    return table;
}

namespace {

double gl32_panel(const std::function<double(double)>& f, double a, double b) {
    const auto& t = gauss_legendre_32();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kGaussLegendreOrder; ++i) {
        const double x = mid + half * static_cast<double>(t.node[i]);
        sum += static_cast<double>(t.weight[i]) * f(x);
    }
    return sum * half;
}

struct Panel {
    double a, b;
    double refined;  // sum of the two half-panel estimates
    double err;      // |coarse - refined|
};

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
    const double coarse = gl32_panel(f, a, b);
    const double mid = 0.5 * (a + b);
    const double refined = gl32_panel(f, a, mid) + gl32_panel(f, mid, b);
    return Panel{a, b, refined, std::fabs(coarse - refined)};
}

}  // namespace

AdaptiveQuad integrate_adaptive(const std::function<double(double)>& f,
                                double a, double b, double abs_tol,
                                double rel_tol, long long max_panels) {
    auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
    queue.push(make_panel(f, a, b));

    double value = queue.top().refined;
    double err = queue.top().err;
    long long panels = 1;
    while (err > abs_tol + rel_tol * std::fabs(value) && panels < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = make_panel(f, worst.a, mid);
        const Panel right = make_panel(f, mid, worst.b);
        value += left.refined + right.refined - worst.refined;
        err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
        ++panels;
    }

    // Recompute the final sums in fixed left-to-right order so the result is
    // independent of the refinement history.
    std::vector<Panel> final_panels;
    final_panels.reserve(static_cast<std::size_t>(panels + 1));
    while (!queue.empty()) {
        final_panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(final_panels.begin(), final_panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    value = 0.0;
    err = 0.0;
    for (const Panel& p : final_panels) {
        value += p.refined;
        err += p.err;
    }

    AdaptiveQuad out;
    out.value = value;
    out.abs_error_estimate = err;
    out.panels = static_cast<long long>(final_panels.size());
    out.converged = err <= abs_tol + rel_tol * std::fabs(value);
    return out;
}

}  // namespace qstats
