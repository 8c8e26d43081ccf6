#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "incircle/core.hpp"

namespace incircle {

/// Degree-k polynomial in x = r^2 whose roots are the squared incircle radii:
/// sigma_1 x^k - sigma_3 x^(k-1) + ... with k = floor((n-1)/2). Coefficients
/// are stored highest degree first and strictly alternate in sign.
class RadiusPolynomial {
public:
    RadiusPolynomial(std::vector<double> coefficients, std::size_t n)
        : coefficients_(std::move(coefficients)), n_(n) {
        if (coefficients_.empty() || coefficients_.front() <= 0.0) {
            throw Error(errc::invalid_argument, "leading coefficient must be positive");
        }
    }

    std::size_t degree() const noexcept { return coefficients_.size() - 1; }
    std::size_t polygon_size() const noexcept { return n_; }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }

    double operator()(double x) const noexcept {
        double acc = 0.0;
        for (double c : coefficients_) {
            acc = acc * x + c;
        }
        return acc;
    }

    double derivative(double x) const noexcept {
        double acc = 0.0;
        double k = static_cast<double>(degree());
        for (std::size_t j = 0; j + 1 < coefficients_.size(); ++j) {
            acc = acc * x + coefficients_[j] * (k - static_cast<double>(j));
        }
        return acc;
    }

    /// |p(x)| / (sigma_1 * max(1, x)^k).
    double normalized_residual(double x) const noexcept {
        return std::abs((*this)(x)) /
               (coefficients_.front() * std::pow(std::max(1.0, x), static_cast<double>(degree())));
    }

private:
    std::vector<double> coefficients_;
    std::size_t n_;
};

/// One incircle radius root: winding index m (1 = convex, >1 = star), the
/// area K = r * s, and two independent correctness witnesses.
struct InscribedSolution {
    double radius = 0.0;
    int winding = 0;
    double r_squared = 0.0;
    double area = 0.0;
    double residual = 0.0;      // normalized polynomial residual at r^2
    double angle_defect = 0.0;  // |f(r) - m*pi|
};

/// Coefficients (sigma_1, -sigma_3, sigma_5, ...): the odd-index symmetric
/// functions with alternating signs, ending at sigma_n (odd n) or sigma_(n-1)
/// (even n, after the factor of r is removed).
inline RadiusPolynomial radius_polynomial(const SymmetricFunctions& sf, std::size_t n) {
    if (n < 3 || sf.order() != n) {
        throw Error(errc::invalid_argument, "symmetric functions do not match polygon size");
    }
    const std::size_t k = (n - 1) / 2;
    std::vector<double> coeffs(k + 1);
    double sign = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
        coeffs[j] = sign * sf[2 * j + 1];
        sign = -sign;
    }
    return RadiusPolynomial(std::move(coeffs), n);
}

/// f(r) = sum_j arctan(t_j / r): the total half-angle subtended at the center.
/// Strictly decreasing in r, with limits n*pi/2 at 0+ and 0 at infinity.
inline double angle_sum(const TangentLengths& t, double r) {
    if (!(r > 0.0)) {
        throw Error(errc::nonpositive_radius, "radius must be positive");
    }
    double sum = 0.0;
    for (double tj : t) {
        sum += std::atan(tj / r);
    }
    return sum;
}

/// K = r * s.
inline double area_from_radius(const TangentLengths& t, double r) {
    if (!(r > 0.0)) {
        throw Error(errc::nonpositive_radius, "radius must be positive");
    }
    return r * t.semiperimeter();
}

/// The unique r > 0 with angle_sum(t, r) = theta, for theta in (0, n*pi/2).
/// Bracketed by exponential search from s/n, bisected to 1e-13 relative
/// width, then polished with two secant steps.
inline double radius_for_angle_sum(const TangentLengths& t, double theta) {
    const std::size_t n = t.size();
    if (!(theta > 0.0) || !(theta < 0.5 * std::numbers::pi * static_cast<double>(n))) {
        throw Error(errc::invalid_argument, "target angle outside (0, n*pi/2)");
    }
    const auto g = [&](double r) { return angle_sum(t, r) - theta; };

    double lo = t.semiperimeter() / static_cast<double>(n);
    double hi = lo;
    double g_lo = g(lo);
    double g_hi = g_lo;
    if (g_lo > 0.0) {
        do {
            lo = hi;
            g_lo = g_hi;
            hi *= 2.0;
            g_hi = g(hi);
        } while (g_hi > 0.0);
    } else if (g_lo < 0.0) {
        do {
            hi = lo;
            g_hi = g_lo;
            lo *= 0.5;
            g_lo = g(lo);
        } while (g_lo < 0.0);
    } else {
        return lo;
    }

    // g(lo) >= 0 >= g(hi); f is strictly monotone so the root is unique.
    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double g_mid = g(mid);
        if (g_mid > 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
            g_hi = g_mid;
        }
    }

    double best = 0.5 * (lo + hi);
    for (int pass = 0; pass < 2; ++pass) {
        if (g_lo == g_hi) {
            break;
        }
        const double candidate = hi - g_hi * (hi - lo) / (g_hi - g_lo);
        if (!(candidate > lo) || !(candidate < hi)) {
            break;
        }
        const double g_candidate = g(candidate);
        best = candidate;
        if (g_candidate > 0.0) {
            lo = candidate;
            g_lo = g_candidate;
        } else if (g_candidate < 0.0) {
            hi = candidate;
            g_hi = g_candidate;
        } else {
            break;
        }
    }
    return best;
}

namespace detail {

/// One guarded Newton pass against the radius polynomial. The step is capped
/// at the bisection uncertainty and only kept when it lowers |p|.
inline double polish_against_polynomial(const RadiusPolynomial& poly, double r) {
    const double x = r * r;
    const double px = poly(x);
    const double dpx = poly.derivative(x);
    if (dpx == 0.0) {
        return r;
    }
    const double step = px / dpx;
    if (!std::isfinite(step) || std::abs(step) > 4e-13 * x) {
        return r;
    }
    const double x_new = x - step;
    if (!(x_new > 0.0) || std::abs(poly(x_new)) >= std::abs(px)) {
        return r;
    }
    return std::sqrt(x_new);
}

}  // namespace detail

/// All k = floor((n-1)/2) incircle radii, ordered by winding index m = 1..k,
/// radii strictly decreasing. Each root solves angle_sum(t, r) = m*pi.
inline std::vector<InscribedSolution> all_radii(const TangentLengths& t) {
    const std::size_t n = t.size();
    if (n < 3) {
        throw Error(errc::invalid_argument, "polygon needs at least 3 tangent lengths");
    }
    const std::size_t k = (n - 1) / 2;
    const SymmetricFunctions sf = elementary_symmetric(t);
    const RadiusPolynomial poly = radius_polynomial(sf, n);
    const double s = t.semiperimeter();

    std::vector<InscribedSolution> solutions;
    solutions.reserve(k);
    for (std::size_t m = 1; m <= k; ++m) {
        const double target = std::numbers::pi * static_cast<double>(m);
        double r = radius_for_angle_sum(t, target);
        r = detail::polish_against_polynomial(poly, r);

        InscribedSolution sol;
        sol.radius = r;
        sol.winding = static_cast<int>(m);
        sol.r_squared = r * r;
        sol.area = r * s;
        sol.residual = poly.normalized_residual(sol.r_squared);
        sol.angle_defect = std::abs(angle_sum(t, r) - target);
        solutions.push_back(sol);
    }
    return solutions;
}

/// Heron's K = sqrt(s(s-a)(s-b)(s-c)); the independent oracle for the n = 3
/// pipeline.
inline double heron_area(const SideLengths& sides, double tol = kDefaultTolerance) {
    if (sides.size() != 3) {
        throw Error(errc::not_triangle, "Heron's formula requires exactly 3 sides");
    }
    const double s = sides.semiperimeter();
    const double scale = sides.perimeter();
    double product = s;
    for (double a : sides) {
        const double margin = s - a;
        if (margin <= tol * scale) {
            throw Error(errc::infeasible, "triangle inequality violated");
        }
        product *= margin;
    }
    return std::sqrt(product);
}

/// Radii in closed form for k <= 2 (n <= 6): k = 1 gives r^2 = sigma_3 /
/// sigma_1; k = 2 uses the quadratic formula, computing the larger root first
/// and the smaller via the product of roots. Returns nullopt for k > 2.
inline std::optional<std::vector<double>> closed_form_radii(const TangentLengths& t) {
    const std::size_t n = t.size();
    if (n < 3) {
        throw Error(errc::invalid_argument, "polygon needs at least 3 tangent lengths");
    }
    const std::size_t k = (n - 1) / 2;
    if (k > 2) {
        return std::nullopt;
    }
    const SymmetricFunctions sf = elementary_symmetric(t);
    if (k == 1) {
        return std::vector<double>{std::sqrt(sf[3] / sf[1])};
    }
    const double disc = std::max(sf[3] * sf[3] - 4.0 * sf[1] * sf[5], 0.0);
    const double big = (sf[3] + std::sqrt(disc)) / (2.0 * sf[1]);
    const double small = sf[5] / (sf[1] * big);
    return std::vector<double>{std::sqrt(big), std::sqrt(small)};
}

}  // namespace incircle
