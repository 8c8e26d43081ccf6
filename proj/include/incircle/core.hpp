#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace incircle {

/// Error categories for every failure the library reports.
enum class errc {
    invalid_argument,
    not_odd,
    not_even,
    not_triangle,
    not_quad,
    infeasible,
    alternating_sum_nonzero,
    empty_interval,
    out_of_interval,
    nonpositive_radius,
    nonpositive_tangent,
    equality_violated,
    concyclicity_failure,
    point_not_on_circle,
    no_tangent,
    poncelet_closure_failure,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Relative epsilon used by every approximate comparison in the library.
/// Comparisons are scale-normalized: callers pass the natural scale of the
/// quantities involved (usually the polygon perimeter).
inline constexpr double kDefaultTolerance = 1e-9;

inline bool approx_zero(double x, double scale, double tol = kDefaultTolerance) {
    return std::abs(x) <= tol * scale;
}

inline bool approx_eq(double x, double y, double scale, double tol = kDefaultTolerance) {
    return std::abs(x - y) <= tol * scale;
}

namespace detail {

inline void require_finite_positive(const std::vector<double>& values, errc code,
                                    const char* what) {
    for (double v : values) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw Error(code, std::string(what) + " must be finite and strictly positive");
        }
    }
}

}  // namespace detail

/// Ordered cyclic list of side lengths a_1..a_n, n >= 3. Immutable.
class SideLengths {
public:
    explicit SideLengths(std::vector<double> values) : values_(std::move(values)) {
        if (values_.size() < 3) {
            throw Error(errc::invalid_argument, "need at least 3 sides");
        }
        detail::require_finite_positive(values_, errc::invalid_argument, "side lengths");
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool odd() const noexcept { return values_.size() % 2 == 1; }
    double perimeter() const noexcept {
        return std::accumulate(values_.begin(), values_.end(), 0.0);
    }
    double semiperimeter() const noexcept { return 0.5 * perimeter(); }

private:
    std::vector<double> values_;
};

/// Tangent lengths t_1..t_n: the common length of the two tangent segments
/// from each vertex to the incircle. Strictly positive. Immutable.
class TangentLengths {
public:
    explicit TangentLengths(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw Error(errc::invalid_argument, "tangent lengths must be nonempty");
        }
        detail::require_finite_positive(values_, errc::nonpositive_tangent, "tangent lengths");
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    /// s = sum of all tangent lengths; recomputed, never cached.
    double semiperimeter() const noexcept {
        return std::accumulate(values_.begin(), values_.end(), 0.0);
    }

private:
    std::vector<double> values_;
};

/// Elementary symmetric functions sigma_0..sigma_n of n tangent lengths,
/// sigma_0 = 1. Coefficients of prod_j (x + t_j).
class SymmetricFunctions {
public:
    explicit SymmetricFunctions(std::vector<double> sigma) : sigma_(std::move(sigma)) {
        if (sigma_.empty() || sigma_.front() != 1.0) {
            throw Error(errc::invalid_argument, "sigma_0 must be 1");
        }
    }

    /// n: the number of underlying tangent lengths.
    std::size_t order() const noexcept { return sigma_.size() - 1; }
    double operator[](std::size_t j) const noexcept { return sigma_[j]; }
    const std::vector<double>& sigma() const noexcept { return sigma_; }

private:
    std::vector<double> sigma_;
};

/// sigma_j computed by multiplying in one linear factor (x + t_j) at a time.
/// For positive t every update adds positive terms, so no cancellation occurs.
inline SymmetricFunctions elementary_symmetric(const TangentLengths& t) {
    std::vector<double> sigma(t.size() + 1, 0.0);
    sigma[0] = 1.0;
    std::size_t used = 0;
    for (double tj : t) {
        ++used;
        for (std::size_t j = used; j >= 1; --j) {
            sigma[j] += tj * sigma[j - 1];
        }
    }
    return SymmetricFunctions(std::move(sigma));
}

/// The list starting at index k, wrapping around.
template <typename T>
std::vector<T> cyclic_rotate(const std::vector<T>& values, std::size_t k) {
    if (k >= values.size()) {
        throw Error(errc::invalid_argument, "rotation index out of range");
    }
    std::vector<T> out;
    out.reserve(values.size());
    out.insert(out.end(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
    out.insert(out.end(), values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

}  // namespace incircle
