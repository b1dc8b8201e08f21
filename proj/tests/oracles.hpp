#pragma once

// Brute-force reference computations for the tests. Everything here is
// deliberately naive and independent of the library's algorithms: grids are
// scanned exhaustively and filtered, partitions are generated as explicit
// lists, and the big-number arithmetic calls boost directly.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Quad = boost::multiprecision::cpp_bin_float_quad;

// All (n_0..n_s) with sum = N and energy = s, by odometer scan of the full
// (N+1)^(s+1) grid. Tiny inputs only.
inline std::vector<std::vector<int>> grid_level_states(int N, int s) {
    double cells = 1.0;
    for (int i = 0; i <= s; ++i) {
        cells *= N + 1;
        if (cells > 5e7) {
            throw std::invalid_argument("grid_level_states: grid too large");
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> n(static_cast<std::size_t>(s) + 1, 0);
    for (;;) {
        int particles = 0;
        long long energy = 0;
        for (int k = 0; k <= s; ++k) {
            particles += n[static_cast<std::size_t>(k)];
            energy += static_cast<long long>(k) * n[static_cast<std::size_t>(k)];
        }
        if (particles == N && energy == s) {
            out.push_back(n);
        }
        int pos = s;
        while (pos >= 0 && n[static_cast<std::size_t>(pos)] == N) {
            n[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++n[static_cast<std::size_t>(pos)];
    }
    return out;
}

// Same set by recursion bounded only by the particle budget, with the energy
// equation checked at the leaves. Handles the N,s <= 8 sweeps.
inline void level_states_rec(int s, int level, int particles_left, long long energy,
                             std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
    if (level > s) {
        if (particles_left == 0 && energy == s) {
            out.push_back(prefix);
        }
        return;
    }
    for (int n = 0; n <= particles_left; ++n) {
        prefix.push_back(n);
        level_states_rec(s, level + 1, particles_left - n,
                         energy + static_cast<long long>(level) * n, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> level_states(int N, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    level_states_rec(s, 0, N, 0, prefix, out);
    return out;
}

// All (k_1..k_N) with sum = s, by odometer scan of the (s+1)^N grid.
inline std::vector<std::vector<int>> grid_compositions(int N, int s) {
    double cells = 1.0;
    for (int i = 0; i < N; ++i) {
        cells *= s + 1;
        if (cells > 5e7) {
            throw std::invalid_argument("grid_compositions: grid too large");
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> k(static_cast<std::size_t>(N), 0);
    for (;;) {
        long long sum = 0;
        for (int v : k) {
            sum += v;
        }
        if (sum == s) {
            out.push_back(k);
        }
        int pos = N - 1;
        while (pos >= 0 && k[static_cast<std::size_t>(pos)] == s) {
            k[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++k[static_cast<std::size_t>(pos)];
    }
    return out;
}

// Explicit partition lists (parts descending).
inline void partitions_rec(int left, int max_part, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(left - part, part, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_rec(s, s, prefix, out);
    return out;
}

// N! / prod(n_k!) computed directly.
inline Int multinomial(long long N, const std::vector<int>& occ) {
    Int value = 1;
    for (long long i = 2; i <= N; ++i) {
        value *= i;
    }
    for (int n : occ) {
        for (int i = 2; i <= n; ++i) {
            value /= i;
        }
    }
    return value;
}

// The harmonic partition integrand evaluated in quad precision at a double
// argument; the reference for the double-precision evaluation.
inline double integrand_quad(long long s, double x) {
    const Quad xq(x);
    Quad prod = 1;
    for (long long k = 1; k <= s; ++k) {
        prod *= sin(Quad(s + k) * xq) / sin(Quad(k) * xq);
    }
    prod *= cos(Quad(s * s - 2 * s) * xq);
    return static_cast<double>(prod);
}

}  // namespace oracle
