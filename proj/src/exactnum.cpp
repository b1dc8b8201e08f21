#include "qstats/exactnum.hpp"

#include <stdexcept>

namespace qstats {

BigInt factorial(long long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be nonnegative");
    }
    BigInt result = 1;
    for (long long i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binomial(long long n, long long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    // Multiply and divide in lockstep; each division is exact because every
    // prefix product is itself a binomial coefficient.
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::string decimal_string(const BigInt& value) {
    return value.str();
}

BigInt bigint_from_decimal(const std::string& text) {
    return BigInt(text);
}

std::string fraction_string(const BigRat& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

BigRat bigrat_from_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return BigRat(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("bigrat_from_fraction: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRat(num, den);
}

}  // namespace qstats
