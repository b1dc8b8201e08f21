#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qstats/occupancy.hpp"
#include "qstats/partitions.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace qstats;

TEST_CASE("partition counts: examples and brute-force enumeration") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(10) == 42);
    CHECK(BigInt(oracle::all_partitions(10).size()) == partition_count(10));
    for (int s = 0; s <= 25; ++s) {
        CHECK(BigInt(oracle::all_partitions(s).size()) == partition_count(s));
    }
    CHECK_THROWS_AS(partition_count(-1), std::invalid_argument);
}

TEST_CASE("restricted partition counts") {
    CHECK(restricted_partition_count(4, 4) == 5);
    CHECK(restricted_partition_count(4, 2) == 3);  // {4, 3+1, 2+2}
    for (long long s = 1; s <= 12; ++s) {
        CHECK(restricted_partition_count(s, 1) == 1);
    }
    CHECK(restricted_partition_count(0, 0) == 1);
    CHECK(restricted_partition_count(3, 0) == 0);

    // Brute force: filter explicit partition lists by length.
    for (int s = 0; s <= 18; ++s) {
        const auto parts = oracle::all_partitions(s);
        for (int m = 0; m <= s + 1; ++m) {
            long long want = 0;
            for (const auto& p : parts) {
                if (static_cast<int>(p.size()) <= m) {
                    ++want;
                }
            }
            CHECK(restricted_partition_count(s, m) == want);
        }
    }
}

TEST_CASE("restricted counts saturate at the full partition count") {
    for (long long s = 0; s <= 30; ++s) {
        CHECK(restricted_partition_count(s, s) == partition_count(s));
        CHECK(restricted_partition_count(s, s + 7) == partition_count(s));
    }
}

TEST_CASE("restricted counts equal level-state enumeration sizes") {
    for (long long N = 1; N <= 12; ++N) {
        for (long long s = 0; s <= 12; ++s) {
            CHECK(restricted_partition_count(s, N) ==
                  BigInt(enumerate_level_states(N, s).size()));
        }
    }
}

TEST_CASE("integrand small-x limit is the central binomial count") {
    // Each factor sin((s+k)x)/sin(kx) -> (s+k)/k, so the product -> C(2s, s).
    CHECK(partition_integrand(4, 1e-6) == doctest::Approx(70.0).epsilon(1e-9));
    CHECK(partition_integrand(5, 1e-7) == doctest::Approx(252.0).epsilon(1e-9));
}

TEST_CASE("integrand algebraic identity at s = 1") {
    for (double x : {0.1, 0.3, 0.7, 1.1, 1.5}) {
        const double expected = 2.0 * std::cos(x) * std::cos(x);
        CHECK(partition_integrand(1, x) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("integrand matches a quad-precision evaluation") {
    const double pi_4 = std::atan(1.0);
    // x = fl(pi/4) sits next to a removable singularity of the s = 4 product.
    CHECK(partition_integrand(4, pi_4) ==
          doctest::Approx(oracle::integrand_quad(4, pi_4)).epsilon(1e-9));
    for (double x : {0.05, 0.61, 1.04, 1.33}) {
        CHECK(partition_integrand(7, x) ==
              doctest::Approx(oracle::integrand_quad(7, x)).epsilon(1e-9));
    }
}

TEST_CASE("integrand rejects out-of-range and singular arguments") {
    CHECK_THROWS_AS(partition_integrand(0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(partition_integrand(3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(partition_integrand(3, 2.0), std::invalid_argument);
    try {
        partition_integrand(3, 0.0);
        FAIL("expected SingularPointError");
    } catch (const SingularPointError& e) {
        CHECK(e.kappa == 1);
    }
}

TEST_CASE("integrand is smooth across interior denominator zeros") {
    // Removable singularities: values straddling each zero nearly agree.
    const long long s = 6;
    const double pi = 3.141592653589793238462643;
    for (double x0 : {pi / 3, pi / 4, pi / 5, 2 * pi / 5, pi / 6}) {
        const double lo = partition_integrand(s, x0 - 1e-6);
        const double hi = partition_integrand(s, x0 + 1e-6);
        const double scale = std::max({1.0, std::fabs(lo), std::fabs(hi)});
        CHECK(std::fabs(hi - lo) < 1e-3 * scale);
    }
}

TEST_CASE("partition integral reproduces exact counts") {
    const QuadReport r4 = partition_integral(4);
    CHECK(r4.converged);
    CHECK(r4.value == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(r4.abs_error_estimate < 0.4);
    CHECK(r4.abs_error_estimate >= 0.0);
    CHECK(r4.panels >= 1);
    CHECK(r4.min_denominator_distance > 0.0);

    const QuadReport r1 = partition_integral(1);
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));

    const QuadReport r12 = partition_integral(12);
    CHECK(r12.converged);
    CHECK(r12.value == doctest::Approx(77.0).epsilon(1e-8));
}

TEST_CASE("integral rounds to p_s for s up to 14") {
    for (long long s = 1; s <= 14; ++s) {
        const QuadReport r = partition_integral(s);
        const double exact = partition_count(s).convert_to<double>();
        CHECK(r.converged);
        CHECK(std::fabs(r.value - exact) < 0.5);
        CHECK(r.abs_error_estimate < 0.4);
        CHECK(std::llround(r.value) == std::llround(exact));
    }
}

TEST_CASE("panels hint raises the initial resolution") {
    const QuadReport coarse = partition_integral(4);
    const QuadReport fine = partition_integral(4, 64);
    CHECK(fine.panels >= 64);
    CHECK(fine.value == doctest::Approx(coarse.value).epsilon(1e-9));
}

TEST_CASE("cancellation beyond double range is flagged, not returned") {
    const QuadReport r = partition_integral(40);
    CHECK_FALSE(r.converged);
    CHECK(r.abs_error_estimate >= 0.4);
    CHECK_THROWS_AS(partition_integral(0), std::invalid_argument);
    CHECK_THROWS_AS(partition_integral(4, 0, 0), std::invalid_argument);
}
