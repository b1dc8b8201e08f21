#include "qstats/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qstats {

Poly geometric_poly(long long degree) {
    if (degree < 0) {
        throw std::invalid_argument("geometric_poly: negative degree");
    }
    return Poly(static_cast<std::size_t>(degree) + 1, BigInt(1));
}

Poly poly_mul_trunc(const Poly& a, const Poly& b, long long degree_cap) {
    if (degree_cap < 0) {
        throw std::invalid_argument("poly_mul_trunc: negative degree cap");
    }
    if (a.empty() || b.empty()) {
        return {};
    }
    const long long deg_a = static_cast<long long>(a.size()) - 1;
    const long long deg_b = static_cast<long long>(b.size()) - 1;
    const long long deg = std::min(deg_a + deg_b, degree_cap);
    Poly out(static_cast<std::size_t>(deg) + 1, BigInt(0));
    for (long long i = 0; i <= std::min(deg_a, deg); ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) {
            continue;
        }
        const long long jmax = std::min(deg_b, deg - i);
        for (long long j = 0; j <= jmax; ++j) {
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

Poly poly_pow_trunc(const Poly& base, long long exponent, long long degree_cap) {
    if (exponent < 0) {
        throw std::invalid_argument("poly_pow_trunc: negative exponent");
    }
    Poly result{BigInt(1)};
    Poly square = base;
    long long e = exponent;
    while (e > 0) {
        if (e & 1) {
            result = poly_mul_trunc(result, square, degree_cap);
        }
        e >>= 1;
        if (e > 0) {
            square = poly_mul_trunc(square, square, degree_cap);
        }
    }
    return result;
}

BigInt poly_coeff(const Poly& p, long long degree) {
    if (degree < 0 || degree >= static_cast<long long>(p.size())) {
        return 0;
    }
    return p[static_cast<std::size_t>(degree)];
}

}  // namespace qstats
