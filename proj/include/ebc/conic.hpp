#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "ebc/centers.hpp"
#include "ebc/numeric.hpp"
#include "ebc/triangle.hpp"

namespace ebc {

// conic c0 + c1 x + c2 y + c3 xy + c4 x^2 + c5 y^2 = 0
struct ImplicitConic {
    std::array<double, 6> c{};

    double eval(const Vec2& p) const {
        return c[0] + c[1] * p.x + c[2] * p.y + c[3] * p.x * p.y + c[4] * p.x * p.x +
               c[5] * p.y * p.y;
    }
    Vec2 gradient(const Vec2& p) const {
        return {c[1] + c[3] * p.y + 2.0 * c[4] * p.x, c[2] + c[3] * p.x + 2.0 * c[5] * p.y};
    }
    Mat2Sym hessian() const { return {2.0 * c[4], c[3], 2.0 * c[5]}; }
    double hessian_det() const { return 4.0 * c[4] * c[5] - c[3] * c[3]; }

    double coeff_norm() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return std::sqrt(s);
    }

    bool is_ellipse() const { return hessian_det() > 0.0; }
    bool is_hyperbola() const { return hessian_det() < 0.0; }

    // c0 = 1 when the conic misses the origin, otherwise unit coefficient norm
    // with the largest-magnitude coefficient positive
    ImplicitConic normalized() const {
        ImplicitConic out = *this;
        const double n = coeff_norm();
        if (std::fabs(c[0]) > 1e-9 * n) {
            for (double& v : out.c) v /= c[0];
        } else {
            int big = 0;
            for (int i = 1; i < 6; ++i)
                if (std::fabs(c[i]) > std::fabs(c[big])) big = i;
            const double f = (c[big] < 0.0 ? -1.0 : 1.0) / n;
            for (double& v : out.c) v *= f;
        }
        return out;
    }
};

// conic translated by v: points p on the source map to p + v
inline ImplicitConic translate(const ImplicitConic& g, const Vec2& v) {
    ImplicitConic h;
    h.c[0] = g.c[0] - g.c[1] * v.x - g.c[2] * v.y + g.c[3] * v.x * v.y + g.c[4] * v.x * v.x +
             g.c[5] * v.y * v.y;
    h.c[1] = g.c[1] - g.c[3] * v.y - 2.0 * g.c[4] * v.x;
    h.c[2] = g.c[2] - g.c[3] * v.x - 2.0 * g.c[5] * v.y;
    h.c[3] = g.c[3];
    h.c[4] = g.c[4];
    h.c[5] = g.c[5];
    return h;
}

inline double membership_residual(const ImplicitConic& g, const Vec2& p) {
    return std::fabs(g.eval(p)) / (g.coeff_norm() * (1.0 + norm2(p)));
}

inline bool on_conic(const ImplicitConic& g, const Vec2& p, const Tolerances& tol = tolerances()) {
    return membership_residual(g, p) < tol.membership;
}

// normalized discriminant of the restriction of g to the line p0 + s*dir;
// zero at tangency, negative when the line misses the conic
inline double line_discriminant(const ImplicitConic& g, const Vec2& p0, const Vec2& dir) {
    const double A = g.c[4] * dir.x * dir.x + g.c[3] * dir.x * dir.y + g.c[5] * dir.y * dir.y;
    const double B = dot(g.gradient(p0), dir);
    const double C = g.eval(p0);
    const double scale = std::max({B * B, std::fabs(4.0 * A * C), 1e-300});
    return (B * B - 4.0 * A * C) / scale;
}

inline bool tangent_to_line(const ImplicitConic& g, const Vec2& p0, const Vec2& dir,
                            const Tolerances& tol = tolerances()) {
    return std::fabs(line_discriminant(g, p0, dir)) < tol.line_tangency;
}

// Tangency of two conics at a common point: both memberships plus parallel
// gradients. The angle tolerance is looser than the membership one because a
// tangency parameter located by extremum search carries sqrt(eps) noise.
inline bool tangent_at(const ImplicitConic& g1, const ImplicitConic& g2, const Vec2& p,
                       double angle_tol = 1e-6, const Tolerances& tol = tolerances()) {
    if (!on_conic(g1, p, tol) || !on_conic(g2, p, tol)) return false;
    const Vec2 n1 = normalized(g1.gradient(p));
    const Vec2 n2 = normalized(g2.gradient(p));
    return std::fabs(cross(n1, n2)) < angle_tol;
}

// ---------------------------------------------------------------------------
// circumconic with prescribed center (vertex incidence x3 + vanishing gradient)
// ---------------------------------------------------------------------------

namespace detail {

inline ImplicitConic circumconic_direct(const Triangle& tri, const Vec2& m,
                                        const Tolerances& tol) {
    LinSystem sys;
    for (int i = 0; i < 3; ++i) {
        const Vec2& p = tri.v[i];
        sys.matrix.push_back({p.x, p.y, p.x * p.y, p.x * p.x, p.y * p.y});
    }
    sys.matrix.push_back({1.0, 0.0, m.y, 2.0 * m.x, 0.0});
    sys.matrix.push_back({0.0, 1.0, m.x, 0.0, 2.0 * m.y});
    sys.rhs = {-1.0, -1.0, -1.0, 0.0, 0.0};
    const auto x = solve_linear(sys, tol);
    ImplicitConic g;
    g.c = {1.0, x[0], x[1], x[2], x[3], x[4]};
    return g;
}

}  // namespace detail

// Solves the five-constraint linear system for the circumconic centered at m.
// The c0 = 1 form excludes conics through the origin, so when a vertex sits at
// the origin (or the system is singular because the conic itself passes
// through it) the solve runs in a translated frame and maps back.
inline ImplicitConic circumconic_with_center(const Triangle& tri, const Vec2& m,
                                             const Tolerances& tol = tolerances()) {
    double scale = norm(m);
    for (const Vec2& p : tri.v) scale = std::max(scale, norm(p));

    bool vertex_at_origin = false;
    for (const Vec2& p : tri.v)
        if (norm(p) < 1e-9 * scale) vertex_at_origin = true;

    ImplicitConic g;
    bool solved = false;
    if (!vertex_at_origin) {
        try {
            g = detail::circumconic_direct(tri, m, tol);
            solved = true;
        } catch (const SingularMatrix&) {
        }
    }
    for (int attempt = 1; attempt <= 3 && !solved; ++attempt) {
        const Vec2 off = scale * static_cast<double>(attempt) *
                         Vec2{0.6180339887498949, 0.4142135623730951};
        try {
            const Triangle shifted{tri.v[0] + off, tri.v[1] + off, tri.v[2] + off, tol};
            const ImplicitConic gs = detail::circumconic_direct(shifted, m + off, tol);
            g = translate(gs, -1.0 * off);
            solved = true;
        } catch (const SingularMatrix&) {
        }
    }
    if (!solved)
        throw SingularMatrix("circumconic_with_center: degenerate configuration");

    const ImplicitConic gn = g.normalized();
    const double nrm = gn.coeff_norm();
    for (const Vec2& p : tri.v)
        if (std::fabs(gn.eval(p)) > tol.conic_incidence * nrm * scale * scale)
            throw NumericalFailure("circumconic_with_center: vertex incidence failed");
    if (norm(gn.gradient(m)) > tol.conic_gradient * nrm * std::max(scale, 1.0))
        throw NumericalFailure("circumconic_with_center: gradient at center failed");
    return gn;
}

// ---------------------------------------------------------------------------
// axes, foci, focal length
// ---------------------------------------------------------------------------

enum class ConicKind { Ellipse, Hyperbola };

struct ConicAxes {
    ConicKind kind = ConicKind::Ellipse;
    Vec2 center;
    double semi_major = 0.0;  // transverse semi-axis for hyperbolas
    double semi_minor = 0.0;  // conjugate semi-axis for hyperbolas
    Vec2 major_direction;
    std::array<Vec2, 2> foci{};   // ellipse only
    double focal_length = 0.0;    // hyperbola: lambda with xy=k convention
    double aspect_ratio() const { return semi_major / semi_minor; }
};

inline ConicAxes axes(const ImplicitConic& g, const Tolerances& tol = tolerances()) {
    const double det = g.hessian_det();
    const double hscale = g.c[3] * g.c[3] + g.c[4] * g.c[4] + g.c[5] * g.c[5];
    if (std::fabs(det) < tol.degenerate_hessian * std::max(hscale, 1e-300))
        throw DegenerateConic("axes: parabolic or degenerate conic");

    ConicAxes out;
    out.center = {(-2.0 * g.c[5] * g.c[1] + g.c[3] * g.c[2]) / det,
                  (g.c[3] * g.c[1] - 2.0 * g.c[4] * g.c[2]) / det};
    const double d0 = g.eval(out.center);
    const EigenSym2 eg = eigen_sym2(g.hessian());

    const auto half_axis2 = [&](const Vec2& u) {
        const double d2 = g.c[4] * u.x * u.x + g.c[3] * u.x * u.y + g.c[5] * u.y * u.y;
        return -d0 / d2;
    };
    const double t1 = half_axis2(eg.u1);
    const double t2 = half_axis2(eg.u2);

    if (det > 0.0) {
        out.kind = ConicKind::Ellipse;
        if (t1 <= 0.0 || t2 <= 0.0)
            throw ImaginaryAxis("axes: ellipse with no real points");
        if (t1 >= t2) {
            out.semi_major = std::sqrt(t1);
            out.semi_minor = std::sqrt(t2);
            out.major_direction = eg.u1;
        } else {
            out.semi_major = std::sqrt(t2);
            out.semi_minor = std::sqrt(t1);
            out.major_direction = eg.u2;
        }
        const double cdist =
            std::sqrt(std::max(out.semi_major * out.semi_major - out.semi_minor * out.semi_minor, 0.0));
        out.foci = {out.center + cdist * out.major_direction,
                    out.center - cdist * out.major_direction};
        return out;
    }

    out.kind = ConicKind::Hyperbola;
    if (d0 == 0.0)
        throw DegenerateConic("axes: hyperbola degenerated to its asymptotes");
    double trans2, conj2;
    if (t1 > 0.0) {
        trans2 = t1;
        conj2 = -t2;
        out.major_direction = eg.u1;
    } else {
        trans2 = t2;
        conj2 = -t1;
        out.major_direction = eg.u2;
    }
    out.semi_major = std::sqrt(trans2);
    out.semi_minor = std::sqrt(conj2);
    // lambda convention: for xy = k this gives 2*sqrt(2k)
    out.focal_length = std::sqrt(2.0 * (trans2 + conj2));
    return out;
}

// ---------------------------------------------------------------------------
// rectangular circumhyperbola through the origin: c1 x + c2 y + c3 xy = 0
// ---------------------------------------------------------------------------

struct OriginHyperbola {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;

    double eval(const Vec2& p) const { return c1 * p.x + c2 * p.y + c3 * p.x * p.y; }
    Vec2 center() const { return {-c2 / c3, -c1 / c3}; }
    //|8 c1 c2 / c3^2| under the root; zero when the conic is a line pair
    double focal_length() const { return std::sqrt(std::fabs(8.0 * c1 * c2 / (c3 * c3))); }
    ImplicitConic to_implicit() const { return ImplicitConic{{0.0, c1, c2, c3, 0.0, 0.0}}; }
    double membership_residual(const Vec2& p) const {
        const double n = std::sqrt(c1 * c1 + c2 * c2 + c3 * c3);
        return std::fabs(eval(p)) / (n * (1.0 + norm2(p)));
    }
};

// The unique conic of the family c1 x + c2 y + c3 xy through three points.
// Exists exactly when the conic through them and the origin is rectangular
// with axis-parallel asymptotes, which is the paper's setting (the orbit's
// Feuerbach hyperbola and the excentral Jerabek both pass through X9 = (0,0)).
// Throws DegenerateToLines for isosceles configurations unless allowed.
inline OriginHyperbola hyperbola_through(const Vec2& p1, const Vec2& p2, const Vec2& p3,
                                         bool allow_degenerate = false,
                                         const Tolerances& tol = tolerances()) {
    const double l1 = dist(p2, p3), l2 = dist(p1, p3), l3 = dist(p1, p2);
    const double lsum = l1 + l2 + l3;
    const bool isosceles = std::fabs(l1 - l2) < tol.isosceles_rel * lsum ||
                           std::fabs(l2 - l3) < tol.isosceles_rel * lsum ||
                           std::fabs(l3 - l1) < tol.isosceles_rel * lsum;
    if (isosceles && !allow_degenerate)
        throw DegenerateToLines("hyperbola_through: isosceles input, foci collapse");

    const std::array<std::array<double, 3>, 3> row = {{{p1.x, p1.y, p1.x * p1.y},
                                                       {p2.x, p2.y, p2.x * p2.y},
                                                       {p3.x, p3.y, p3.x * p3.y}}};
    const auto cross3 = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                     a[0] * b[1] - a[1] * b[0]};
    };
    std::array<double, 3> best{};
    double best_norm = -1.0;
    for (const auto& [i, j] : std::array<std::array<int, 2>, 3>{{{0, 1}, {0, 2}, {1, 2}}}) {
        const auto c = cross3(row[i], row[j]);
        const double n = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
        if (n > best_norm) {
            best_norm = n;
            best = c;
        }
    }
    OriginHyperbola h{best[0] / best_norm, best[1] / best_norm, best[2] / best_norm};
    for (const Vec2& p : {p1, p2, p3})
        if (h.membership_residual(p) > 1e-8)
            throw NumericalFailure("hyperbola_through: no conic of this family through the points");
    return h;
}

// ---------------------------------------------------------------------------
// inconic with prescribed center (Brianchon perspector + cevian contacts)
// ---------------------------------------------------------------------------

struct Inconic {
    ImplicitConic conic;
    Vec2 perspector;
    Triangle contacts;
    bool is_ellipse = true;  // HyperbolaResult flag when false
};

// g is the barycentric first-coordinate function of the requested center; the
// perspector follows from it and the contacts are the perspector's cevian
// feet. The conic solves as the one-dimensional null space of the three
// incidence plus three sideline-tangency constraints.
inline Inconic inconic_with_center(const Triangle& tri, const Vec2& m, const BarycentricFn& g,
                                   const Tolerances& tol = tolerances()) {
    const double s1 = tri.s[0], s2 = tri.s[1], s3 = tri.s[2];
    const double g1 = g(s1, s2, s3), g2 = g(s2, s3, s1), g3 = g(s3, s1, s2);

    double scale = 0.0;
    for (const Vec2& p : tri.v) scale = std::max(scale, norm(p));
    const Vec2 m_from_g = barycentric_to_cartesian(tri, g1, g2, g3, tol);
    if (dist(m_from_g, m) > 1e-9 * std::max(scale, 1.0))
        throw NumericalFailure("inconic_with_center: center function inconsistent with m");

    const double b1 = 1.0 / (g2 + g3 - g1);
    const double b2 = 1.0 / (g3 + g1 - g2);
    const double b3 = 1.0 / (g1 + g2 - g3);

    const Vec2 persp = barycentric_to_cartesian(tri, b1, b2, b3, tol);
    const Triangle contacts{barycentric_to_cartesian(tri, 0.0, b2, b3, tol),
                            barycentric_to_cartesian(tri, b1, 0.0, b3, tol),
                            barycentric_to_cartesian(tri, b1, b2, 0.0, tol)};

    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 3; ++i) {
        const Vec2& q = contacts.v[i];
        const Vec2 dir = tri.v[(i + 2) % 3] - tri.v[(i + 1) % 3];  // sideline opposite v[i]
        rows.push_back({1.0, q.x, q.y, q.x * q.y, q.x * q.x, q.y * q.y});
        rows.push_back(
            {0.0, dir.x, dir.y, dir.x * q.y + dir.y * q.x, 2.0 * q.x * dir.x, 2.0 * q.y * dir.y});
    }
    const auto v = null_space_vector(rows, tol);

    Inconic out{ImplicitConic{{v[0], v[1], v[2], v[3], v[4], v[5]}}.normalized(), persp, contacts,
                true};
    out.is_ellipse = out.conic.is_ellipse();

    for (int i = 0; i < 3; ++i) {
        const Vec2& u = tri.v[(i + 1) % 3];
        const Vec2 dir = tri.v[(i + 2) % 3] - u;
        if (std::fabs(line_discriminant(out.conic, u, dir)) > tol.line_tangency)
            throw NumericalFailure("inconic_with_center: sideline tangency failed");
    }
    return out;
}

// ---------------------------------------------------------------------------
// ellipse/hyperbola prediction from the medial-region test
// ---------------------------------------------------------------------------

enum class ConicClass { Ellipse, Hyperbola, Boundary };

// The three midlines split the plane into seven regions; a circumconic is an
// ellipse iff its center lies in the medial interior or in one of the three
// double-crossing regions (even number of sign flips against the centroid).
inline ConicClass classify_by_medial(const Triangle& tri, const Vec2& m,
                                     const Tolerances& tol = tolerances()) {
    const Triangle med = medial(tri);
    const Vec2 g = centroid(tri);
    double scale = 0.0;
    for (const Vec2& p : tri.v) scale = std::max(scale, norm(p - g));
    int flips = 0;
    for (int i = 0; i < 3; ++i) {
        const Vec2& u = med.v[(i + 1) % 3];
        const Vec2& w = med.v[(i + 2) % 3];
        const Vec2 n = normalized(perp(w - u));
        const double dm = dot(n, m - u);
        const double dg = dot(n, g - u);
        if (std::fabs(dm) < tol.boundary_band * std::max(scale, 1.0)) return ConicClass::Boundary;
        if ((dm > 0.0) != (dg > 0.0)) ++flips;
    }
    return (flips % 2 == 0) ? ConicClass::Ellipse : ConicClass::Hyperbola;
}

}  // namespace ebc
