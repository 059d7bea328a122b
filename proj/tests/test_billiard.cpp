#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "ebc/billiard.hpp"
#include "ebc/centers.hpp"
#include "ebc/triangle.hpp"

using namespace ebc;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const BilliardShape kShape{1.5, 1.0};
const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));
}  // namespace

TEST_CASE("shape validation") {
    CHECK_THROWS(BilliardShape{1.0, 1.5});
    CHECK_THROWS(BilliardShape{1.0, -0.5});
    CHECK(BilliardShape{2.0, 1.0}.delta() == Approx(std::sqrt(13.0)));
}

TEST_CASE("caustic axes closed forms at a=1.5, b=1") {
    const CausticAxes c = caustic_axes(kShape);
    // frozen from 50-digit evaluation of a(delta-b^2)/(a^2-b^2), b(a^2-delta)/(a^2-b^2)
    CHECK(c.a_c == Approx(1.1430749027719963).epsilon(1e-14));
    CHECK(c.b_c == Approx(0.23795006481866912).epsilon(1e-14));
    CHECK(0.0 < c.b_c);
    CHECK(c.b_c < c.a_c);
    CHECK(c.a_c < kShape.a);
    // confocal with the billiard
    CHECK(c.a_c * c.a_c - c.b_c * c.b_c ==
          Approx(kShape.a * kShape.a - kShape.b * kShape.b).epsilon(1e-14));
}

TEST_CASE("caustic rejects the circular limit") {
    CHECK_THROWS_AS(caustic_axes(BilliardShape{1.0 + 1e-13, 1.0}), DegenerateCircle);
}

TEST_CASE("caustic strictly inside at a/b = phi with tangent sides") {
    const BilliardShape s{kPhi, 1.0};
    const CausticAxes c = caustic_axes(s);
    CHECK(c.a_c < s.a);
    CHECK(c.b_c < s.b);
    const Orbit o = orbit_at(s, 0.6);
    for (int k = 0; k < 3; ++k) {
        const Vec2 u = (k == 0) ? o.p2 : (k == 1) ? o.p1 : o.p1;
        const Vec2 v = (k == 0) ? o.p3 : (k == 1) ? o.p2 : o.p3;
        CHECK(std::fabs(caustic_tangency_residual(c, u, v)) < 1e-9);
    }
}

TEST_CASE("family constants at a=1.5, b=1") {
    const FamilyConstants f = family_constants(kShape);
    // frozen from 50-digit evaluation of the closed forms
    CHECK(f.rho == Approx(0.36265966294292057).epsilon(1e-14));
    CHECK(f.perimeter == Approx(6.7375083241822027).epsilon(1e-14));
    CHECK(f.has_obtuse);
}

TEST_CASE("obtuse flag flips at sqrt(2 sqrt(2) - 1)") {
    CHECK(obtuse_threshold() == Approx(1.3521934494539567).epsilon(1e-14));
    CHECK_FALSE(family_constants(BilliardShape{1.35, 1.0}).has_obtuse);
    CHECK(family_constants(BilliardShape{1.36, 1.0}).has_obtuse);
}

TEST_CASE("rho equals the measured r/R of a sampled orbit") {
    for (double ab : {1.2, 1.5, kPhi, 2.4}) {
        const BilliardShape s{ab, 1.0};
        const Orbit o = orbit_at(s, 0.83);
        const Triangle tri{o.p1, o.p2, o.p3};
        const MetricData m = metric(tri);
        CHECK(std::fabs(m.r / m.R - family_constants(s).rho) < 1e-9);
    }
}

TEST_CASE("sideways isosceles orbit at t=0") {
    const Orbit o = orbit_at(kShape, 0.0);
    const CausticAxes c = caustic_axes(kShape);
    const double yp = kShape.b * std::sqrt(1.0 - c.a_c * c.a_c / (kShape.a * kShape.a));
    CHECK(o.p1.x == Approx(1.5));
    CHECK(o.p1.y == Approx(0.0).margin(1e-15));
    CHECK(o.p2.x == Approx(-c.a_c).epsilon(1e-13));
    CHECK(o.p3.x == Approx(-c.a_c).epsilon(1e-13));
    CHECK(std::fabs(o.p2.y) == Approx(yp).epsilon(1e-13));
    CHECK(std::fabs(o.p3.y) == Approx(yp).epsilon(1e-13));
    CHECK(o.p2.y * o.p3.y < 0.0);
    CHECK(Triangle{o.p1, o.p2, o.p3}.is_isosceles(1e-12));
}

TEST_CASE("upright isosceles orbit at t=pi/2") {
    const Orbit o = orbit_at(kShape, kPi / 2.0);
    CHECK(o.p1.x == Approx(0.0).margin(1e-15));
    CHECK(o.p1.y == Approx(1.0));
    CHECK(o.p2.x == Approx(-o.p3.x).epsilon(1e-12));
    CHECK(o.p2.y == Approx(o.p3.y).epsilon(1e-12));
}

TEST_CASE("orbit at t=7 degrees satisfies every orbit invariant") {
    const Orbit o = orbit_at(kShape, 7.0 * kPi / 180.0);
    const FamilyConstants f = family_constants(kShape);
    const CausticAxes c = caustic_axes(kShape);
    CHECK(std::fabs(o.perimeter() - f.perimeter) < 1e-9 * f.perimeter);
    for (const Vec2& p : {o.p1, o.p2, o.p3})
        CHECK(std::fabs(kShape.boundary_residual(p)) < 1e-10);
    CHECK(std::fabs(caustic_tangency_residual(c, o.p2, o.p3)) < 1e-9);
    CHECK(std::fabs(caustic_tangency_residual(c, o.p1, o.p2)) < 1e-9);
    CHECK(std::fabs(caustic_tangency_residual(c, o.p1, o.p3)) < 1e-9);
    CHECK(reflection_defect(kShape, o.p1, o.p2, o.p3) < 1e-8);
    CHECK(reflection_defect(kShape, o.p2, o.p3, o.p1) < 1e-8);
    CHECK(reflection_defect(kShape, o.p3, o.p1, o.p2) < 1e-8);
    // positive orientation fixed by construction
    CHECK(cross(o.p2 - o.p1, o.p3 - o.p1) > 0.0);
}

TEST_CASE("orbit parameter canonicalization and mirror symmetry") {
    const Orbit a = orbit_at(kShape, 0.4);
    const Orbit b = orbit_at(kShape, 0.4 + 2.0 * kPi);
    CHECK(a.p2.x == Approx(b.p2.x).margin(1e-12));
    CHECK(a.p2.y == Approx(b.p2.y).margin(1e-12));

    // t -> -t mirrors the triangle across the x axis (P2/P3 exchange roles)
    const Orbit m = orbit_at(kShape, -0.4);
    CHECK(m.p1.x == Approx(a.p1.x).margin(1e-13));
    CHECK(m.p1.y == Approx(-a.p1.y).margin(1e-13));
    CHECK(m.p2.x == Approx(a.p3.x).margin(1e-12));
    CHECK(m.p2.y == Approx(-a.p3.y).margin(1e-12));
    CHECK(m.p3.x == Approx(a.p2.x).margin(1e-12));
    CHECK(m.p3.y == Approx(-a.p2.y).margin(1e-12));
}

TEST_CASE("perimeter, rho and Mittenpunkt invariance over 720 samples") {
    const FamilyConstants f = family_constants(kShape);
    double worst_perim = 0.0, worst_rho = 0.0, worst_x9 = 0.0;
    for (int i = 0; i < 720; ++i) {
        const double t = 2.0 * kPi * (i + 0.5) / 720.0;
        const Orbit o = orbit_at(kShape, t);
        worst_perim = std::max(worst_perim, std::fabs(o.perimeter() - f.perimeter));
        const Triangle tri{o.p1, o.p2, o.p3};
        const MetricData m = metric(tri);
        worst_rho = std::max(worst_rho, std::fabs(m.r / m.R - f.rho));
        worst_x9 = std::max(worst_x9, norm(center(tri, 9)));
    }
    CHECK(worst_perim < 1e-9 * f.perimeter);
    CHECK(worst_rho < 1e-9);
    CHECK(worst_x9 < 1e-9);
}

TEST_CASE("right orbit vertex") {
    CHECK_THROWS_AS(right_orbit_vertex(BilliardShape{1.3, 1.0}), NoRightOrbit);

    const Vec2 p = right_orbit_vertex(kShape);
    // frozen from 50-digit evaluation of the closed forms
    CHECK(p.x == Approx(0.80859930747555789).epsilon(1e-13));
    CHECK(p.y == Approx(0.84226339505196702).epsilon(1e-13));
    CHECK(std::fabs(kShape.boundary_residual(p)) < 1e-12);

    const Orbit o = orbit_at(kShape, boundary_parameter(kShape, p));
    const Vec2 e1 = o.p2 - o.p1, e2 = o.p3 - o.p1;
    CHECK(std::fabs(dot(e1, e2)) / (norm(e1) * norm(e2)) < 1e-8);
}

TEST_CASE("right orbit vertex collapses to the top at the obtuse threshold") {
    const BilliardShape s{obtuse_threshold() * (1.0 + 1e-13), 1.0};
    const Vec2 p = right_orbit_vertex(s);
    CHECK(std::fabs(p.x) < 1e-5);
    CHECK(p.y == Approx(s.b).epsilon(1e-9));
}
