#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "incircle/incircle.hpp"

// Test-only oracles and generators. Everything here is independent of the
// implementation paths it is used to check.
namespace oracles {

/// sigma_j as the literal sum of products over all (n choose j) subsets.
inline std::vector<double> subset_symmetric(const std::vector<double>& t) {
    const std::size_t n = t.size();
    std::vector<double> sigma(n + 1, 0.0);
    sigma[0] = 1.0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        double product = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                product *= t[i];
            }
        }
        sigma[static_cast<std::size_t>(std::popcount(mask))] += product;
    }
    return sigma;
}

/// Even-n feasibility by enumerating every contiguous odd-length cyclic
/// alternating sum, plus the zero full-length alternating sum.
inline bool even_feasible_brute(const std::vector<double>& a, double tol) {
    const std::size_t n = a.size();
    const double scale = std::accumulate(a.begin(), a.end(), 0.0);
    double full = 0.0;
    double sign = 1.0;
    for (double ai : a) {
        full += sign * ai;
        sign = -sign;
    }
    if (std::abs(full) > tol * scale) {
        return false;
    }
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; len < n; len += 2) {
            double chain = 0.0;
            double term_sign = 1.0;
            for (std::size_t j = 0; j < len; ++j) {
                chain += term_sign * a[(start + j) % n];
                term_sign = -term_sign;
            }
            if (chain <= tol * scale) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<double> random_lengths(std::mt19937_64& rng, std::size_t n, double lo,
                                          double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> values(n);
    for (double& v : values) {
        v = dist(rng);
    }
    return values;
}

/// Sides a_j = t_j + t_(j+1) induced by a positive tangent vector.
inline std::vector<double> sides_from_tangents(const std::vector<double>& t) {
    std::vector<double> sides(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        sides[j] = t[j] + t[(j + 1) % t.size()];
    }
    return sides;
}

/// Random quadruple with a1 + a3 = a2 + a4 and all entries comfortably
/// positive.
inline std::vector<double> random_bicentric_sides(std::mt19937_64& rng, double lo = 0.1,
                                                  double hi = 10.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    for (;;) {
        const double a1 = dist(rng);
        const double a2 = dist(rng);
        const double a3 = dist(rng);
        const double a4 = a1 + a3 - a2;
        if (a4 > lo && a4 < hi) {
            return {a1, a2, a3, a4};
        }
    }
}

/// Kite sides (u, u, v, v) from the legs of a right triangle mirrored about
/// its hypotenuse; always bicentric, with circumradius sqrt(u^2 + v^2) / 2.
inline std::vector<double> dipippo_kite(double u, double v) { return {u, u, v, v}; }

}  // namespace oracles
