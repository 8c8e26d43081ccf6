#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "incircle/core.hpp"
#include "incircle/geometry.hpp"
#include "incircle/radius.hpp"
#include "incircle/tangents.hpp"

namespace incircle {

/// Chained circle intersections accumulate more error than a single root
/// solve, so Poncelet closure is checked at a looser relative threshold.
inline constexpr double kPonceletClosureTolerance = 1e-8;

/// A quadrilateral that is simultaneously tangential (incircle at the origin)
/// and cyclic (all four vertices on the circumcircle).
struct BicentricQuad {
    SideLengths sides;
    TangentLengths tangents;
    double inradius = 0.0;
    PlanePoint incenter{0.0, 0.0};
    double circumradius = 0.0;
    PlanePoint circumcenter{0.0, 0.0};
    PolygonEmbedding embedding;
};

namespace detail {

inline void require_quad(const SideLengths& sides) {
    if (sides.size() != 4) {
        throw Error(errc::not_quad, "requires exactly 4 sides");
    }
}

inline void require_quad_equality(const SideLengths& sides, double tol) {
    const double gap = (sides[0] + sides[2]) - (sides[1] + sides[3]);
    if (!approx_zero(gap, sides.perimeter(), tol)) {
        std::ostringstream os;
        os << "a1 + a3 = " << sides[0] + sides[2] << " differs from a2 + a4 = "
           << sides[1] + sides[3];
        throw Error(errc::equality_violated, os.str());
    }
}

struct Circle {
    PlanePoint center;
    double radius = 0.0;
};

/// Circle through three points via perpendicular-bisector intersection.
inline Circle circumcircle(PlanePoint a, PlanePoint b, PlanePoint c) {
    const PlanePoint ab = b - a;
    const PlanePoint ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (d == 0.0) {
        throw Error(errc::invalid_argument, "collinear points have no circumcircle");
    }
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const PlanePoint center{a.x + (ac.y * ab2 - ab.y * ac2) / d,
                            a.y + (ab.x * ac2 - ac.x * ab2) / d};
    return Circle{center, norm(a - center)};
}

struct PonceletAdvance {
    PlanePoint next;      // second intersection of the tangent with the outer circle
    PlanePoint tangency;  // point where the chord touches the inner circle
};

inline PonceletAdvance poncelet_advance(double inner_r, PlanePoint incenter, double outer_R,
                                        PlanePoint outer_center, PlanePoint point, double tol) {
    if (!approx_zero(norm(point - outer_center) - outer_R, outer_R, tol)) {
        throw Error(errc::point_not_on_circle, "start point is not on the outer circle");
    }
    const PlanePoint radial = point - incenter;
    const double d = norm(radial);
    if (d - inner_r <= tol * inner_r) {
        throw Error(errc::no_tangent, "point has no tangent to the inner circle");
    }
    // Tangency point rotated counterclockwise from the radial direction, so
    // cross(point - incenter, tangency - incenter) > 0.
    const double cos_b = inner_r / d;
    const double sin_b = std::sqrt(std::max(1.0 - cos_b * cos_b, 0.0));
    const PlanePoint u = (1.0 / d) * radial;
    const PlanePoint dir{u.x * cos_b - u.y * sin_b, u.x * sin_b + u.y * cos_b};
    const PlanePoint tangency = incenter + inner_r * dir;

    const PlanePoint chord = tangency - point;
    const double len = norm(chord);
    const PlanePoint w = (1.0 / len) * chord;
    // Second intersection of the chord line with the outer circle.
    const double lambda = -2.0 * dot(point - outer_center, w);
    return PonceletAdvance{point + lambda * w, tangency};
}

}  // namespace detail

/// Closed-form tangent lengths for a tangential-and-cyclic quadrilateral:
/// t_1 = a1 a4 / (a1 + a3) and cyclically. Requires a1 + a3 = a2 + a4; the
/// output satisfies the Kutin identity t1 t3 = t2 t4.
inline TangentLengths bicentric_tangents(const SideLengths& sides,
                                         double tol = kDefaultTolerance) {
    detail::require_quad(sides);
    detail::require_quad_equality(sides, tol);
    const double s = sides[0] + sides[2];
    std::vector<double> t{sides[0] * sides[3] / s, sides[1] * sides[0] / s,
                          sides[2] * sides[1] / s, sides[3] * sides[2] / s};
    for (double tj : t) {
        if (tj <= tol * s) {
            throw Error(errc::infeasible, "degenerate quadrilateral: tangent length vanishes");
        }
    }
    return TangentLengths(std::move(t));
}

/// K = sqrt((s-a1)(s-a2)(s-a3)(s-a4)) for a convex cyclic quadrilateral.
inline double brahmagupta_area(const SideLengths& sides, double tol = kDefaultTolerance) {
    detail::require_quad(sides);
    const double s = sides.semiperimeter();
    const double scale = sides.perimeter();
    double product = 1.0;
    for (double a : sides) {
        const double margin = s - a;
        if (margin <= tol * scale) {
            throw Error(errc::infeasible, "no convex cyclic quadrilateral with these sides");
        }
        product *= margin;
    }
    return std::sqrt(product);
}

/// Full bicentric construction: closed-form tangents, the k = 1 radius root,
/// the plane embedding, and the circumcircle through p1, p2, p3. The fourth
/// vertex landing on that circle is a checked postcondition.
inline BicentricQuad build_bicentric(const SideLengths& sides, double tol = kDefaultTolerance) {
    TangentLengths tangents = bicentric_tangents(sides, tol);
    const std::vector<InscribedSolution> solutions = all_radii(tangents);
    const InscribedSolution& sol = solutions.front();
    PolygonEmbedding embedding = construct_polygon(tangents, sol, tol);

    const detail::Circle outer = detail::circumcircle(embedding.vertices[0],
                                                      embedding.vertices[1],
                                                      embedding.vertices[2]);
    const double miss = norm(embedding.vertices[3] - outer.center) - outer.radius;
    if (!approx_zero(miss, outer.radius, tol)) {
        throw Error(errc::concyclicity_failure, "fourth vertex misses the circumcircle");
    }
    return BicentricQuad{sides,        std::move(tangents), sol.radius, PlanePoint{0.0, 0.0},
                         outer.radius, outer.center,        std::move(embedding)};
}

/// One Poncelet step: from a point on the outer circle, take the tangent to
/// the inner circle that advances counterclockwise and return its second
/// intersection with the outer circle.
inline PlanePoint poncelet_step(double inner_r, PlanePoint incenter, double outer_R,
                                PlanePoint outer_center, PlanePoint point,
                                double tol = kDefaultTolerance) {
    return detail::poncelet_advance(inner_r, incenter, outer_R, outer_center, point, tol).next;
}

/// Four Poncelet steps from outer_center + R (cos theta, sin theta). The
/// chain must return to its start (Poncelet's porism); the result is a new
/// quadrilateral sharing both circles, returned as its embedding.
inline PolygonEmbedding poncelet_family(const BicentricQuad& quad, double start_angle,
                                        double tol = kDefaultTolerance) {
    const PlanePoint start = quad.circumcenter +
                             quad.circumradius * PlanePoint{std::cos(start_angle),
                                                            std::sin(start_angle)};
    PolygonEmbedding embedding;
    embedding.radius = quad.inradius;
    embedding.vertices.resize(4);
    embedding.tangency_points.resize(4);

    PlanePoint point = start;
    for (std::size_t step = 0; step < 4; ++step) {
        embedding.vertices[step] = point;
        const detail::PonceletAdvance advance = detail::poncelet_advance(
            quad.inradius, quad.incenter, quad.circumradius, quad.circumcenter, point, tol);
        // Tangency of edge vertices[step] -> vertices[step+1] precedes the
        // later vertex in the embedding's indexing.
        embedding.tangency_points[(step + 1) % 4] = advance.tangency;
        point = advance.next;
    }

    const double gap = norm(point - start);
    if (gap > kPonceletClosureTolerance * quad.circumradius) {
        throw Error(errc::poncelet_closure_failure, "Poncelet chain did not return to start");
    }
    embedding.closure_defect = gap / quad.inradius;
    embedding.winding = 1;
    return embedding;
}

}  // namespace incircle
