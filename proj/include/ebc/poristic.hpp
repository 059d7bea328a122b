#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "ebc/centers.hpp"
#include "ebc/conic.hpp"
#include "ebc/triangle.hpp"

namespace ebc {

// Triangles sharing a fixed circumcircle (center O at the origin, radius R)
// and incircle (center I = (d, 0), radius r) with d^2 = R(R - 2r). Poncelet
// closure makes every tangent seed close into a triangle.
struct PoristicFamily {
    double R = 0.0;
    double r = 0.0;
    double d = 0.0;

    PoristicFamily(double R_, double r_) : R(R_), r(r_) {
        if (!(R > 0.0) || !(r > 0.0) || !(R - 2.0 * r > -1e-12 * R))
            throw ClosureFailure("PoristicFamily: needs R >= 2r > 0");
        d = std::sqrt(std::max(R * (R - 2.0 * r), 0.0));
    }

    Vec2 circumcenter() const { return {0.0, 0.0}; }
    Vec2 incenter() const { return {d, 0.0}; }
    double rho() const { return r / R; }

    // invariant circumbilliard aspect ratio of the family
    double aspect_ratio_closed_form() const {
        const double p = rho();
        return std::sqrt((p * p + 2.0 * (p + 1.0) * std::sqrt(1.0 - 2.0 * p) + 2.0) /
                         (p * (p + 4.0)));
    }
};

// Member seeded at A = R(cos theta, sin theta): B and C are the second
// circumcircle intersections of the incircle tangents from A.
inline Triangle poristic_member(const PoristicFamily& fam, double theta,
                                const Tolerances& tol = tolerances()) {
    const Vec2 A{fam.R * std::cos(theta), fam.R * std::sin(theta)};
    const Vec2 I = fam.incenter();
    const Vec2 AI = I - A;
    const double dai = norm(AI);
    if (dai <= fam.r * (1.0 + tol.poristic_guard))
        throw ClosureFailure("poristic_member: seed vertex inside the incircle");
    const double base = std::atan2(AI.y, AI.x);
    const double half = std::asin(fam.r / dai);

    Vec2 q[2];
    for (int k = 0; k < 2; ++k) {
        const double g = base + (k == 0 ? half : -half);
        const Vec2 dir{std::cos(g), std::sin(g)};
        if (std::fabs(dot(A, dir)) < tol.poristic_guard * fam.R)
            throw ClosureFailure("poristic_member: tangent grazes the circumcircle");
        const double s = -2.0 * dot(A, dir);
        q[k] = A + s * dir;
    }
    const Triangle t{A, q[0], q[1], tol};

    // closure checks: the far side must touch the incircle, and the member
    // must reproduce the family metric
    const Vec2 u = q[0], v = q[1];
    const Vec2 n = normalized(perp(v - u));
    if (std::fabs(std::fabs(dot(n, I - u)) - fam.r) > tol.poristic_metric * fam.R)
        throw ClosureFailure("poristic_member: Poncelet closure violated");
    const MetricData m = metric(t);
    if (std::fabs(m.r - fam.r) > tol.poristic_metric * fam.R ||
        std::fabs(m.R - fam.R) > tol.poristic_metric * fam.R)
        throw ClosureFailure("poristic_member: member metric drifted");
    return t;
}

// aspect ratio a9/b9 of the member's circumbilliard (X9-centered circumconic)
inline double circumbilliard_ratio(const PoristicFamily& fam, double theta,
                                   const Tolerances& tol = tolerances()) {
    const Triangle t = poristic_member(fam, theta, tol);
    const ImplicitConic cb = circumconic_with_center(t, center(t, 9, tol), tol);
    return axes(cb, tol).aspect_ratio();
}

struct CircleFit {
    Vec2 center;
    double radius = 0.0;
    double rms = 0.0;
};

inline CircleFit fit_circle(const std::vector<Vec2>& pts, const Tolerances& tol = tolerances()) {
    std::vector<std::vector<double>> design;
    std::vector<double> target;
    design.reserve(pts.size());
    for (const Vec2& p : pts) {
        design.push_back({p.x, p.y, 1.0});
        target.push_back(-(p.x * p.x + p.y * p.y));
    }
    const LsqResult ls = lsq_fit(design, target, tol);
    CircleFit out;
    out.center = {-0.5 * ls.coeffs[0], -0.5 * ls.coeffs[1]};
    out.radius = std::sqrt(std::max(norm2(out.center) - ls.coeffs[2], 0.0));
    double ss = 0.0;
    for (const Vec2& p : pts) {
        const double e = dist(p, out.center) - out.radius;
        ss += e * e;
    }
    out.rms = std::sqrt(ss / static_cast<double>(pts.size()));
    return out;
}

struct PoristicLociReport {
    CircleFit excenter_circle;       // radius 2R about X40
    Vec2 x40;                        // stationary over the family
    CircleFit x9_circle;
    Vec2 x9_center_candidate;        // X3 + (X1 - X3)(2R - r)/(4R + r)
    double x9_radius_candidate = 0.0;  // 2 d^2/(4R + r)
    double antiorthic_drift = 0.0;   // max variation of the antiorthic axis
};

namespace detail {

inline Vec2 line_intersection(const Vec2& p1, const Vec2& p2, const Vec2& p3, const Vec2& p4) {
    const Vec2 d1 = p2 - p1, d2 = p4 - p3;
    const double den = cross(d1, d2);
    const double t = cross(p3 - p1, d2) / den;
    return p1 + t * d1;
}

// normal form (nx, ny, c) with unit normal, c >= 0, of the perspectrix of the
// triangle and its excentral
inline std::array<double, 3> antiorthic_axis(const Triangle& t) {
    const Triangle e = excentral(t);
    const Vec2 q1 = line_intersection(t.v[1], t.v[2], e.v[1], e.v[2]);
    const Vec2 q2 = line_intersection(t.v[0], t.v[2], e.v[0], e.v[2]);
    Vec2 n = normalized(perp(q2 - q1));
    double c = dot(n, q1);
    if (c < 0.0) {
        n = -1.0 * n;
        c = -c;
    }
    return {n.x, n.y, c};
}

}  // namespace detail

inline PoristicLociReport center_loci(const PoristicFamily& fam, int n,
                                      const Tolerances& tol = tolerances()) {
    std::vector<Vec2> excenters, x9s;
    std::array<double, 3> axis0{};
    PoristicLociReport rep;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / n;
        const Triangle t = poristic_member(fam, th, tol);
        const Triangle exc = excentral(t);
        for (const Vec2& p : exc.v) excenters.push_back(p);
        x9s.push_back(center(t, 9, tol));
        if (i == 0) {
            axis0 = detail::antiorthic_axis(t);
            rep.x40 = center(t, 40, tol);
        } else {
            const auto ax = detail::antiorthic_axis(t);
            rep.antiorthic_drift =
                std::max({rep.antiorthic_drift, std::fabs(ax[0] - axis0[0]),
                          std::fabs(ax[1] - axis0[1]), std::fabs(ax[2] - axis0[2]) / fam.R});
        }
    }
    rep.excenter_circle = fit_circle(excenters, tol);
    rep.x9_circle = fit_circle(x9s, tol);
    const Vec2 x1 = fam.incenter();
    const Vec2 x3 = fam.circumcenter();
    rep.x9_center_candidate = x3 + (2.0 * fam.R - fam.r) / (4.0 * fam.R + fam.r) * (x1 - x3);
    rep.x9_radius_candidate = 2.0 * fam.d * fam.d / (4.0 * fam.R + fam.r);
    return rep;
}

}  // namespace ebc
