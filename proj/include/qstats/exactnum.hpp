#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qstats {

// Exact arbitrary-precision integer and rational. Every probability in this
// library is a BigRat; BigRat is always stored in lowest terms with a
// positive denominator, so equality of values is equality of representation.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// n! as an exact integer. Throws std::invalid_argument for n < 0.
BigInt factorial(long long n);

/// C(n, k). Returns 0 when k < 0 or k > n. Throws for n < 0.
BigInt binomial(long long n, long long k);

// Decimal-string encodings used by the JSON/CSV emitters.
std::string decimal_string(const BigInt& value);
BigInt bigint_from_decimal(const std::string& text);

// "num/den" encoding; a plain integer string is accepted on input.
std::string fraction_string(const BigRat& value);
BigRat bigrat_from_fraction(const std::string& text);

}  // namespace qstats
