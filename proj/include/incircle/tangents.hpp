#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "incircle/core.hpp"

namespace incircle {

/// Admissible open range for t_1 of an even-sided polygon, together with the
/// full-length alternating sum v = a_1 - a_2 + ... - a_n.
struct FeasibilityInterval {
    double lo = 0.0;
    double hi = 0.0;
    double alternating_sum = 0.0;

    double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

enum class Parity { odd, even };

enum class ViolationKind {
    nonpositive_chain,         // a cyclic odd-length alternating sum is <= 0
    nonzero_alternating_sum,   // the even-n full alternating sum is not 0
};

/// One failed feasibility condition. `start` is the 0-based index of the side
/// the alternating chain begins at; `length` is the number of terms; `value`
/// is the computed signed sum.
struct Violation {
    ViolationKind kind = ViolationKind::nonpositive_chain;
    std::size_t start = 0;
    std::size_t length = 0;
    double value = 0.0;

    std::string describe() const {
        std::ostringstream os;
        if (kind == ViolationKind::nonzero_alternating_sum) {
            os << "alternating sum a1 - a2 + ... - a" << length << " = " << value
               << " must be zero";
        } else {
            os << "alternating sum of length " << length << " starting at a" << (start + 1)
               << " = " << value << " must be positive";
        }
        return os.str();
    }
};

struct FeasibilityReport {
    bool feasible = false;
    Parity parity = Parity::odd;
    std::vector<Violation> violations;
    std::optional<FeasibilityInterval> interval;  // even n only
};

namespace detail {

struct SweepResult {
    double lo = 0.0;
    double hi = 0.0;
    double v = 0.0;       // full alternating sum
    std::size_t lo_step = 0;  // even prefix index attaining lo (0 = initial bound)
    std::size_t hi_step = 1;  // odd prefix index attaining hi
};

/// Left-to-right sweep over the running alternating sum. After odd steps the
/// upper bound may drop, after even steps the lower bound may rise.
inline SweepResult interval_sweep(const SideLengths& sides) {
    SweepResult result;
    result.lo = 0.0;
    result.hi = sides[0];
    double v = 0.0;
    for (std::size_t i = 1; i <= sides.size(); ++i) {
        if (i % 2 == 1) {
            v += sides[i - 1];
            if (v < result.hi) {
                result.hi = v;
                result.hi_step = i;
            }
        } else {
            v -= sides[i - 1];
            if (v > result.lo) {
                result.lo = v;
                result.lo_step = i;
            }
        }
    }
    result.v = v;
    return result;
}

/// Full-length cyclic alternating sums 2*t_i for odd n, all rotations from one
/// prefix pass: chain(i) = (-1)^i (T - 2 P_i) with P_i the signed prefix sum.
inline std::vector<double> odd_alternating_chains(const SideLengths& sides) {
    const std::size_t n = sides.size();
    std::vector<double> prefix(n + 1, 0.0);
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] + sign * sides[i];
        sign = -sign;
    }
    const double total = prefix[n];
    std::vector<double> chains(n);
    sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        chains[i] = sign * (total - 2.0 * prefix[i]);
        sign = -sign;
    }
    return chains;
}

/// Translate an empty sweep interval into the concrete violated odd-length
/// chain: hi - lo equals the smallest cyclic alternating sum that starts at an
/// odd position, located by the arg-min/arg-max prefix steps.
inline Violation empty_interval_violation(const SweepResult& sweep, std::size_t n) {
    Violation v;
    v.kind = ViolationKind::nonpositive_chain;
    if (sweep.lo_step < sweep.hi_step) {
        v.start = sweep.lo_step;  // 0-based = 1-based lo_step + 1 side
        v.length = sweep.hi_step - sweep.lo_step;
        v.value = sweep.hi - sweep.lo;
    } else {
        v.start = sweep.lo_step % n;
        v.length = n - sweep.lo_step + sweep.hi_step;
        v.value = sweep.v - sweep.lo + sweep.hi;
    }
    return v;
}

}  // namespace detail

/// Unique tangent lengths for odd n: t_i is half the cyclic alternating sum of
/// the sides starting at a_i. Throws if n is even or some t_i fails to be
/// positive by more than tolerance * perimeter (a degenerate polygon).
inline TangentLengths tangents_odd(const SideLengths& sides, double tol = kDefaultTolerance) {
    if (!sides.odd()) {
        throw Error(errc::not_odd, "odd-n inversion requires an odd number of sides");
    }
    const double scale = sides.perimeter();
    std::vector<double> chains = detail::odd_alternating_chains(sides);
    std::vector<double> t(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (chains[i] <= tol * scale) {
            Violation v{ViolationKind::nonpositive_chain, i, chains.size(), chains[i]};
            throw Error(errc::infeasible, v.describe());
        }
        t[i] = 0.5 * chains[i];
    }
    return TangentLengths(std::move(t));
}

/// Open interval of admissible t_1 for even n, plus the alternating sum.
/// Throws NotEven, AlternatingSumNonzero, or EmptyInterval.
inline FeasibilityInterval feasibility_interval_even(const SideLengths& sides,
                                                     double tol = kDefaultTolerance) {
    if (sides.odd()) {
        throw Error(errc::not_even, "feasibility interval requires an even number of sides");
    }
    const double scale = sides.perimeter();
    const detail::SweepResult sweep = detail::interval_sweep(sides);
    if (!approx_zero(sweep.v, scale, tol)) {
        Violation v{ViolationKind::nonzero_alternating_sum, 0, sides.size(), sweep.v};
        throw Error(errc::alternating_sum_nonzero, v.describe());
    }
    if (sweep.hi - sweep.lo <= tol * scale) {
        throw Error(errc::empty_interval,
                    detail::empty_interval_violation(sweep, sides.size()).describe());
    }
    return FeasibilityInterval{sweep.lo, sweep.hi, sweep.v};
}

/// Forward substitution t_2 = a_1 - t_1, t_3 = a_2 - t_2, ... for even n.
/// t1 must sit strictly inside the feasibility interval by more than
/// tolerance * perimeter; the boundary collapses a vertex onto a tangency
/// point.
inline TangentLengths tangents_even(const SideLengths& sides, double t1,
                                    double tol = kDefaultTolerance) {
    const FeasibilityInterval interval = feasibility_interval_even(sides, tol);
    const double margin = tol * sides.perimeter();
    if (!(t1 > interval.lo + margin && t1 < interval.hi - margin)) {
        std::ostringstream os;
        os << "t1 = " << t1 << " outside the open interval (" << interval.lo << ", "
           << interval.hi << ")";
        throw Error(errc::out_of_interval, os.str());
    }
    std::vector<double> t(sides.size());
    t[0] = t1;
    for (std::size_t i = 1; i < sides.size(); ++i) {
        t[i] = sides[i - 1] - t[i - 1];
    }
    return TangentLengths(std::move(t));
}

/// Feasibility as data: dispatches on parity and never throws on infeasible
/// input. Odd n reports every failed rotation; even n reports the equality
/// condition and the t_1 interval.
inline FeasibilityReport check_feasible(const SideLengths& sides,
                                        double tol = kDefaultTolerance) {
    FeasibilityReport report;
    const double scale = sides.perimeter();
    if (sides.odd()) {
        report.parity = Parity::odd;
        const std::vector<double> chains = detail::odd_alternating_chains(sides);
        for (std::size_t i = 0; i < chains.size(); ++i) {
            if (chains[i] <= tol * scale) {
                report.violations.push_back(
                    Violation{ViolationKind::nonpositive_chain, i, chains.size(), chains[i]});
            }
        }
    } else {
        report.parity = Parity::even;
        const detail::SweepResult sweep = detail::interval_sweep(sides);
        report.interval = FeasibilityInterval{sweep.lo, sweep.hi, sweep.v};
        if (!approx_zero(sweep.v, scale, tol)) {
            report.violations.push_back(
                Violation{ViolationKind::nonzero_alternating_sum, 0, sides.size(), sweep.v});
        } else if (sweep.hi - sweep.lo <= tol * scale) {
            report.violations.push_back(detail::empty_interval_violation(sweep, sides.size()));
        }
    }
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace incircle
