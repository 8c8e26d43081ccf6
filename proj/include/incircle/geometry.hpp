#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "incircle/core.hpp"
#include "incircle/radius.hpp"

namespace incircle {

/// A point in the plane, treated as the complex number x + iy where needed.
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

inline PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
inline PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
inline PlanePoint operator*(double c, PlanePoint p) { return {c * p.x, c * p.y}; }

/// Complex product (a.x + i a.y)(b.x + i b.y).
inline PlanePoint cmul(PlanePoint a, PlanePoint b) {
    return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

inline double dot(PlanePoint a, PlanePoint b) { return a.x * b.x + a.y * b.y; }
inline double cross(PlanePoint a, PlanePoint b) { return a.x * b.y - a.y * b.x; }
inline double norm(PlanePoint p) { return std::hypot(p.x, p.y); }

/// A tangential polygon materialized in the plane: incircle centered at the
/// origin, first tangency point on the positive x-axis, counterclockwise.
struct PolygonEmbedding {
    std::vector<PlanePoint> vertices;
    std::vector<PlanePoint> tangency_points;
    double radius = 0.0;
    int winding = -1;             // -1 when the radius is not a closure root
    double closure_defect = 0.0;  // |recomputed q_1 - q_1| / r
};

/// Winding about the origin computed from the tangency points alone, by
/// summing the signed turning angles. Independent of the angle-sum function.
inline int winding_number(const PolygonEmbedding& embedding) {
    const auto& q = embedding.tangency_points;
    double total = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        const PlanePoint a = q[j];
        const PlanePoint b = q[(j + 1) % q.size()];
        total += std::atan2(cross(a, b), dot(a, b));
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Builds the polygon about a circle of radius r by the complex recurrence
/// p_j = q_j (r + i t_j)/r, q_(j+1) = p_j r/(r - i t_j). The recurrence is
/// total in r; the polygon closes only when r is a radius root, and the
/// closure defect records by how much it misses. Division by (r - i t_j) is
/// multiplication by the conjugate over (r^2 + t_j^2).
inline PolygonEmbedding construct_polygon(const TangentLengths& t, double r,
                                          double tol = kDefaultTolerance) {
    if (!(r > 0.0)) {
        throw Error(errc::nonpositive_radius, "radius must be positive");
    }
    if (t.size() < 3) {
        throw Error(errc::invalid_argument, "polygon needs at least 3 tangent lengths");
    }
    const std::size_t n = t.size();
    PolygonEmbedding embedding;
    embedding.radius = r;
    embedding.vertices.resize(n);
    embedding.tangency_points.resize(n);

    PlanePoint q{r, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        embedding.tangency_points[j] = q;
        const PlanePoint rotor{r, t[j]};
        const PlanePoint p = (1.0 / r) * cmul(q, rotor);
        embedding.vertices[j] = p;
        q = (r / (r * r + t[j] * t[j])) * cmul(p, rotor);
    }
    embedding.closure_defect = norm(q - embedding.tangency_points[0]) / r;
    embedding.winding = embedding.closure_defect <= tol ? winding_number(embedding) : -1;
    return embedding;
}

/// Embedding for a solved radius root; the winding index is taken from the
/// solution.
inline PolygonEmbedding construct_polygon(const TangentLengths& t, const InscribedSolution& sol,
                                          double tol = kDefaultTolerance) {
    PolygonEmbedding embedding = construct_polygon(t, sol.radius, tol);
    embedding.winding = sol.winding;
    return embedding;
}

/// Signed area 1/2 sum_j cross(p_j, p_(j+1)), counterclockwise positive. For
/// every closure root this equals r * s, each edge lying at distance r from
/// the origin.
inline double shoelace_area(const PolygonEmbedding& embedding) {
    const auto& p = embedding.vertices;
    double twice = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        twice += cross(p[j], p[(j + 1) % p.size()]);
    }
    return 0.5 * twice;
}

/// Edge lengths |p_(j+1) - p_j| in cyclic order.
inline SideLengths reconstructed_sides(const PolygonEmbedding& embedding) {
    const auto& p = embedding.vertices;
    std::vector<double> sides(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        sides[j] = norm(p[(j + 1) % p.size()] - p[j]);
    }
    return SideLengths(std::move(sides));
}

}  // namespace incircle
