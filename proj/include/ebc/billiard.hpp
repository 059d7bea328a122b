#pragma once

#include <cmath>
#include <numbers>

#include "ebc/errors.hpp"
#include "ebc/tolerances.hpp"
#include "ebc/vec2.hpp"

namespace ebc {

// Elliptic billiard x^2/a^2 + y^2/b^2 = 1 with a > b > 0 and the constants the
// 3-periodic family conserves.
struct BilliardShape {
    double a = 0.0;
    double b = 0.0;

    BilliardShape(double a_, double b_) : a(a_), b(b_) {
        if (!(a > 0.0) || !(b > 0.0) || !(a > b))
            throw NumericalFailure("BilliardShape: requires a > b > 0");
    }

    double delta() const { return std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b); }
    double boundary_residual(const Vec2& p) const {
        return p.x * p.x / (a * a) + p.y * p.y / (b * b) - 1.0;
    }
    Vec2 boundary_point(double t) const { return {a * std::cos(t), b * std::sin(t)}; }
    // outward normal direction (not normalized)
    Vec2 boundary_normal(const Vec2& p) const { return {p.x / (a * a), p.y / (b * b)}; }
};

struct CausticAxes {
    double a_c = 0.0;
    double b_c = 0.0;
};

inline CausticAxes caustic_axes(const BilliardShape& s, const Tolerances& tol = tolerances()) {
    if (s.a - s.b < tol.circle_degenerate_rel * s.a)
        throw DegenerateCircle("caustic_axes: a ~ b, confocal caustic formulas are 0/0");
    const double d = s.delta();
    const double den = s.a * s.a - s.b * s.b;
    return {s.a * (d - s.b * s.b) / den, s.b * (s.a * s.a - d) / den};
}

struct FamilyConstants {
    double perimeter = 0.0;  // L, conserved by the family
    double rho = 0.0;        // r/R, conserved by the family
    bool has_obtuse = false; // a/b beyond sqrt(2*sqrt(2)-1)
};

inline double obtuse_threshold() { return std::sqrt(2.0 * std::numbers::sqrt2 - 1.0); }

inline FamilyConstants family_constants(const BilliardShape& s, const Tolerances& tol = tolerances()) {
    if (s.a - s.b < tol.circle_degenerate_rel * s.a)
        throw DegenerateCircle("family_constants: a ~ b");
    const double d = s.delta();
    const double a2 = s.a * s.a, b2 = s.b * s.b;
    FamilyConstants out;
    out.perimeter = 2.0 * (d + a2 + b2) * std::sqrt(2.0 * d - a2 - b2) / (a2 - b2);
    out.rho = 2.0 * (d - b2) * (a2 - d) / ((a2 - b2) * (a2 - b2));
    out.has_obtuse = s.a / s.b > obtuse_threshold();
    return out;
}

// A 3-periodic orbit seeded at P1 = (a cos t, b sin t). P2, P3 are the second
// billiard intersections of the two tangent lines from P1 to the caustic,
// ordered so the triangle has positive signed area.
struct Orbit {
    double t = 0.0;
    Vec2 p1, p2, p3;
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;  // s_i opposite P_i

    double perimeter() const { return s1 + s2 + s3; }
    bool is_isosceles(double rel_tol) const {
        const double L = perimeter();
        return std::fabs(s1 - s2) < rel_tol * L || std::fabs(s2 - s3) < rel_tol * L ||
               std::fabs(s3 - s1) < rel_tol * L;
    }
};

namespace detail {

inline double canonical_angle(double t) {
    const double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

// second intersection of the line p + s*d with the billiard, the root s=0
// (p on the boundary) deflated out
inline Vec2 second_intersection(const BilliardShape& sh, const Vec2& p, const Vec2& d) {
    const double A = d.x * d.x / (sh.a * sh.a) + d.y * d.y / (sh.b * sh.b);
    const double B = 2.0 * (p.x * d.x / (sh.a * sh.a) + p.y * d.y / (sh.b * sh.b));
    const double s = -B / A;
    return p + s * d;
}

}  // namespace detail

inline Orbit orbit_at(const BilliardShape& sh, double t, const Tolerances& tol = tolerances()) {
    const CausticAxes c = caustic_axes(sh, tol);
    Orbit o;
    o.t = detail::canonical_angle(t);
    o.p1 = sh.boundary_point(o.t);

    // tangency parameters on the caustic: cos(u)*x1/a_c + sin(u)*y1/b_c = 1
    const double al = o.p1.x / c.a_c;
    const double be = o.p1.y / c.b_c;
    const double rr = std::hypot(al, be);
    if (!(rr > 1.0))
        throw NumericalFailure("orbit_at: seed vertex not outside the caustic");
    const double phi = std::atan2(be, al);
    const double dphi = std::acos(1.0 / rr);

    Vec2 q[2];
    for (int k = 0; k < 2; ++k) {
        const double u = phi + (k == 0 ? dphi : -dphi);
        const Vec2 touch{c.a_c * std::cos(u), c.b_c * std::sin(u)};
        q[k] = detail::second_intersection(sh, o.p1, touch - o.p1);
    }
    o.p2 = q[0];
    o.p3 = q[1];
    if (cross(o.p2 - o.p1, o.p3 - o.p1) < 0.0) std::swap(o.p2, o.p3);

    o.s1 = dist(o.p2, o.p3);
    o.s2 = dist(o.p1, o.p3);
    o.s3 = dist(o.p1, o.p2);

    for (const Vec2& p : {o.p1, o.p2, o.p3})
        if (std::fabs(sh.boundary_residual(p)) > tol.on_boundary)
            throw NumericalFailure("orbit_at: vertex left the billiard boundary");
    const FamilyConstants fc = family_constants(sh, tol);
    if (std::fabs(o.perimeter() - fc.perimeter) > tol.perimeter_rel * fc.perimeter)
        throw NumericalFailure("orbit_at: tangent construction lost closure");
    return o;
}

// Vertex of the right-angled member of the family (exists iff a/b exceeds
// sqrt(2*sqrt(2)-1)); the right angle sits at the returned point.
inline Vec2 right_orbit_vertex(const BilliardShape& sh) {
    const double a2 = sh.a * sh.a, b2 = sh.b * sh.b;
    const double d = sh.delta();
    const double rx = a2 * a2 + 3.0 * b2 * b2 - 4.0 * b2 * d;
    const double ry = -b2 * b2 - 3.0 * a2 * a2 + 4.0 * a2 * d;
    if (rx < 0.0)
        throw NoRightOrbit("right_orbit_vertex: a/b below sqrt(2*sqrt(2)-1)");
    const double c3 = std::pow(a2 - b2, 1.5);
    return {a2 * std::sqrt(rx) / c3, b2 * std::sqrt(std::max(ry, 0.0)) / c3};
}

// boundary parameter t of a point on the billiard
inline double boundary_parameter(const BilliardShape& sh, const Vec2& p) {
    return detail::canonical_angle(std::atan2(p.y / sh.b, p.x / sh.a));
}

// algebraic tangency residual of the side line through u,v against the
// caustic: (n.x*a_c)^2 + (n.y*b_c)^2 - c^2, normalized
inline double caustic_tangency_residual(const CausticAxes& ca, const Vec2& u, const Vec2& v) {
    const Vec2 n{v.y - u.y, u.x - v.x};
    const double c = n.x * u.x + n.y * u.y;
    const double lhs = n.x * n.x * ca.a_c * ca.a_c + n.y * n.y * ca.b_c * ca.b_c;
    const double scale = std::max({std::fabs(lhs), c * c, 1e-300});
    return (lhs - c * c) / scale;
}

// angular defect of the reflection law at vertex p with neighbors q1, q2
inline double reflection_defect(const BilliardShape& sh, const Vec2& p, const Vec2& q1, const Vec2& q2) {
    const Vec2 n = normalized(sh.boundary_normal(p));
    const Vec2 e1 = normalized(q1 - p);
    const Vec2 e2 = normalized(q2 - p);
    return std::fabs(std::acos(std::clamp(-dot(n, e1), -1.0, 1.0)) -
                     std::acos(std::clamp(-dot(n, e2), -1.0, 1.0)));
}

}  // namespace ebc
