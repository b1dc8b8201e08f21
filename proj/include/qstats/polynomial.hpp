#pragma once

#include "qstats/exactnum.hpp"

#include <vector>

namespace qstats {

// Dense polynomial with exact integer coefficients; index = power of y.
// All arithmetic is truncated at a caller-supplied degree cap, which is what
// makes coefficient extraction from high powers of generating functions
// affordable.
using Poly = std::vector<BigInt>;

/// 1 + y + y^2 + ... + y^degree.
Poly geometric_poly(long long degree);

/// a * b with every term of degree > degree_cap dropped.
Poly poly_mul_trunc(const Poly& a, const Poly& b, long long degree_cap);

/// base^exponent, truncated at degree_cap (binary exponentiation).
Poly poly_pow_trunc(const Poly& base, long long exponent, long long degree_cap);

/// Coefficient of y^degree; zero outside the stored range.
BigInt poly_coeff(const Poly& p, long long degree);

}  // namespace qstats
