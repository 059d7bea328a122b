#pragma once

#include <array>
#include <cmath>

#include "ebc/errors.hpp"
#include "ebc/tolerances.hpp"
#include "ebc/vec2.hpp"

namespace ebc {

struct Triangle {
    std::array<Vec2, 3> v;   // vertices
    std::array<double, 3> s; // s[i] opposite v[i]

    Triangle(const Vec2& v1, const Vec2& v2, const Vec2& v3,
             const Tolerances& tol = tolerances())
        : v{v1, v2, v3} {
        s = {dist(v2, v3), dist(v1, v3), dist(v1, v2)};
        const double smax = std::max({s[0], s[1], s[2]});
        if (std::fabs(signed_area()) <= tol.area_degenerate_rel * smax * smax)
            throw DegenerateTriangle("Triangle: area below degeneracy threshold");
    }

    double signed_area() const { return 0.5 * cross(v[1] - v[0], v[2] - v[0]); }
    double area() const { return std::fabs(signed_area()); }
    double perimeter() const { return s[0] + s[1] + s[2]; }

    bool is_isosceles(double rel_tol) const {
        const double L = perimeter();
        return std::fabs(s[0] - s[1]) < rel_tol * L || std::fabs(s[1] - s[2]) < rel_tol * L ||
               std::fabs(s[2] - s[0]) < rel_tol * L;
    }
    bool is_right(double rel_tol = 1e-12) const {
        for (int i = 0; i < 3; ++i) {
            const double h2 = s[i] * s[i];
            const double l2 = s[(i + 1) % 3] * s[(i + 1) % 3] + s[(i + 2) % 3] * s[(i + 2) % 3];
            if (std::fabs(h2 - l2) <= rel_tol * std::max(h2, l2)) return true;
        }
        return false;
    }
};

// P = (s1*x*V1 + s2*y*V2 + s3*z*V3) / (s1*x + s2*y + s3*z) for trilinears x:y:z
inline Vec2 trilinear_to_cartesian(const Triangle& tri, double x, double y, double z,
                                   const Tolerances& tol = tolerances()) {
    const double w1 = tri.s[0] * x, w2 = tri.s[1] * y, w3 = tri.s[2] * z;
    const double den = w1 + w2 + w3;
    const double scale = std::fabs(w1) + std::fabs(w2) + std::fabs(w3);
    if (!std::isfinite(scale) || std::fabs(den) < tol.at_infinity_rel * scale)
        throw PointAtInfinity("trilinear_to_cartesian: denominator vanished");
    return (w1 * tri.v[0] + w2 * tri.v[1] + w3 * tri.v[2]) / den;
}

inline Vec2 barycentric_to_cartesian(const Triangle& tri, double w1, double w2, double w3,
                                     const Tolerances& tol = tolerances()) {
    const double den = w1 + w2 + w3;
    const double scale = std::fabs(w1) + std::fabs(w2) + std::fabs(w3);
    if (std::fabs(den) < tol.at_infinity_rel * scale)
        throw PointAtInfinity("barycentric_to_cartesian: denominator vanished");
    return (w1 * tri.v[0] + w2 * tri.v[1] + w3 * tri.v[2]) / den;
}

struct MetricData {
    double r = 0.0;  // inradius
    double R = 0.0;  // circumradius
    double d = 0.0;  // |X1 X3| = sqrt(R(R-2r))
};

inline MetricData metric(const Triangle& tri) {
    MetricData m;
    const double area = tri.area();
    m.r = area / (0.5 * tri.perimeter());
    m.R = tri.s[0] * tri.s[1] * tri.s[2] / (4.0 * area);
    m.d = std::sqrt(std::max(m.R * (m.R - 2.0 * m.r), 0.0));
    return m;
}

// Excenters from the sidelength-weighted vertex combinations.
inline Triangle excentral(const Triangle& t) {
    const double s1 = t.s[0], s2 = t.s[1], s3 = t.s[2];
    const Vec2 e1 = (-s1 * t.v[0] + s2 * t.v[1] + s3 * t.v[2]) / (s2 + s3 - s1);
    const Vec2 e2 = (s1 * t.v[0] - s2 * t.v[1] + s3 * t.v[2]) / (s3 + s1 - s2);
    const Vec2 e3 = (s1 * t.v[0] + s2 * t.v[1] - s3 * t.v[2]) / (s1 + s2 - s3);
    return {e1, e2, e3};
}

inline Triangle medial(const Triangle& t) {
    return {midpoint(t.v[1], t.v[2]), midpoint(t.v[0], t.v[2]), midpoint(t.v[0], t.v[1])};
}

inline Triangle anticomplementary(const Triangle& t) {
    return {t.v[1] + t.v[2] - t.v[0], t.v[2] + t.v[0] - t.v[1], t.v[0] + t.v[1] - t.v[2]};
}

inline Vec2 centroid(const Triangle& t) { return (t.v[0] + t.v[1] + t.v[2]) / 3.0; }

// 2:1 reflection of p about the centroid
inline Vec2 complement_map(const Triangle& t, const Vec2& p) {
    const Vec2 g = centroid(t);
    return g + 0.5 * (g - p);
}

// 1:2 reflection of p about the centroid
inline Vec2 anticomplement_map(const Triangle& t, const Vec2& p) {
    const Vec2 g = centroid(t);
    return g + 2.0 * (g - p);
}

// barycentric coordinates of p (normalized to sum 1)
inline std::array<double, 3> barycentrics_of(const Triangle& t, const Vec2& p) {
    const double a0 = cross(t.v[1] - p, t.v[2] - p);
    const double a1 = cross(t.v[2] - p, t.v[0] - p);
    const double a2 = cross(t.v[0] - p, t.v[1] - p);
    const double sum = a0 + a1 + a2;
    return {a0 / sum, a1 / sum, a2 / sum};
}

// Cevian triangle of p: vertex i is the intersection of line (V_i, p) with the
// opposite sideline; in barycentrics the feet of p = (w1:w2:w3) are
// (0:w2:w3), (w1:0:w3), (w1:w2:0).
inline Triangle cevian_triangle(const Triangle& t, const Vec2& p,
                                const Tolerances& tol = tolerances()) {
    const auto w = barycentrics_of(t, p);
    const double scale = std::fabs(w[0]) + std::fabs(w[1]) + std::fabs(w[2]);
    for (double wi : w)
        if (std::fabs(wi) < 1e-9 * scale)
            throw DegenerateCevian("cevian_triangle: point on a sideline");
    return {barycentric_to_cartesian(t, 0.0, w[1], w[2], tol),
            barycentric_to_cartesian(t, w[0], 0.0, w[2], tol),
            barycentric_to_cartesian(t, w[0], w[1], 0.0, tol)};
}

}  // namespace ebc
