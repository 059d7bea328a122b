#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "ebc/billiard.hpp"
#include "ebc/centers.hpp"
#include "ebc/conic.hpp"
#include "ebc/invariants.hpp"

#include "elementary_conics.hpp"

using namespace ebc;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const BilliardShape kShape{1.5, 1.0};

Triangle orbit_triangle(const BilliardShape& s, double t) {
    const Orbit o = orbit_at(s, t);
    return {o.p1, o.p2, o.p3};
}

}  // namespace

TEST_CASE("circumconic of a generic inscribed triangle recovers the unit circle") {
    const double c45 = std::sqrt(0.5);
    const Triangle t{{1.0, 0.0}, {0.0, 1.0}, {-c45, -c45}};
    const ImplicitConic g = circumconic_with_center(t, {0.0, 0.0});
    CHECK(g.c[0] == Approx(1.0));
    CHECK(std::fabs(g.c[1]) < 1e-13);
    CHECK(std::fabs(g.c[2]) < 1e-13);
    CHECK(std::fabs(g.c[3]) < 1e-13);
    CHECK(g.c[4] == Approx(-1.0).epsilon(1e-13));
    CHECK(g.c[5] == Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("symmetric three-point configuration is a pencil, hence singular") {
    const Triangle t{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(circumconic_with_center(t, Vec2{0.0, 0.0}), SingularMatrix);
}

TEST_CASE("circumbilliard of an orbit triangle is the billiard itself") {
    const Triangle t = orbit_triangle(kShape, 7.0 * kPi / 180.0);
    const ImplicitConic cb = circumconic_with_center(t, center(t, 9));
    CHECK(cb.c[4] / cb.c[0] == Approx(-1.0 / (kShape.a * kShape.a)).epsilon(1e-12));
    CHECK(cb.c[5] / cb.c[0] == Approx(-1.0 / (kShape.b * kShape.b)).epsilon(1e-12));
    CHECK(std::fabs(cb.c[1]) < 1e-12);
    CHECK(std::fabs(cb.c[2]) < 1e-12);
    CHECK(std::fabs(cb.c[3]) < 1e-12);
}

TEST_CASE("translated-frame path handles a vertex at the origin") {
    // elementary triangle: P1 = (0,0) forces the shifted solve
    const Triangle t{{0.0, 0.0}, {1.0, 0.0}, {0.7, 0.9}};
    const ImplicitConic g = circumconic_with_center(t, center(t, 9));
    for (const Vec2& p : t.v) CHECK(membership_residual(g, p) < 1e-12);
    CHECK(norm(g.gradient(center(t, 9))) < 1e-10 * g.coeff_norm());
}

TEST_CASE("printed elementary circumellipses match the solver up to scale") {
    for (auto [u, v] : {std::pair{0.7, 0.9}, std::pair{-0.4, 1.3}, std::pair{1.9, 0.5}}) {
        const ebc_oracle::ElementaryConics ec(u, v);
        const Triangle t{{0.0, 0.0}, {1.0, 0.0}, {u, v}};
        const ImplicitConic e9 = circumconic_with_center(t, center(t, 9));
        const ImplicitConic e1 = circumconic_with_center(t, center(t, 1));
        const ImplicitConic e2 = circumconic_with_center(t, center(t, 2));
        CHECK(ebc_oracle::conic_match_up_to_scale(e9, ec.e9()) < 1e-10);
        CHECK(ebc_oracle::conic_match_up_to_scale(e1, ec.e1()) < 1e-10);
        CHECK(ebc_oracle::conic_match_up_to_scale(e2, ec.e2()) < 1e-10);
    }
}

TEST_CASE("axes of an axis-aligned ellipse") {
    const ImplicitConic g{{-1.0, 0.0, 0.0, 0.0, 0.25, 1.0}};  // x^2/4 + y^2 = 1
    const ConicAxes ax = axes(g);
    CHECK(ax.kind == ConicKind::Ellipse);
    CHECK(ax.semi_major == Approx(2.0).epsilon(1e-14));
    CHECK(ax.semi_minor == Approx(1.0).epsilon(1e-14));
    CHECK(std::fabs(ax.major_direction.y) < 1e-14);
    CHECK(ax.center.x == Approx(0.0).margin(1e-15));
    const double c = std::sqrt(3.0);
    const double paired = std::min(dist(ax.foci[0], {c, 0.0}) + dist(ax.foci[1], {-c, 0.0}),
                                   dist(ax.foci[0], {-c, 0.0}) + dist(ax.foci[1], {c, 0.0}));
    CHECK(paired < 1e-13);
}

TEST_CASE("axes of xy = k is a rectangular hyperbola with lambda = 2 sqrt(2k)") {
    const double k = 0.7;
    const ImplicitConic g{{-k, 0.0, 0.0, 1.0, 0.0, 0.0}};
    const ConicAxes ax = axes(g);
    CHECK(ax.kind == ConicKind::Hyperbola);
    CHECK(ax.focal_length == Approx(2.0 * std::sqrt(2.0 * k)).epsilon(1e-14));
    CHECK(ax.semi_major == Approx(ax.semi_minor).epsilon(1e-13));
}

TEST_CASE("axes round-trip: reconstructed ellipse passes through the vertices") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 200; ++rep) {
        Triangle t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, tolerances()};
        try {
            if (t.area() < 0.3) continue;
            const Vec2 m = center(t, 9);
            const ImplicitConic g = circumconic_with_center(t, m);
            if (!g.is_ellipse()) continue;
            const ConicAxes ax = axes(g);
            const Vec2 vmin = perp(ax.major_direction);
            for (const Vec2& p : t.v) {
                const Vec2 q = p - ax.center;
                const double r = std::pow(dot(q, ax.major_direction) / ax.semi_major, 2) +
                                 std::pow(dot(q, vmin) / ax.semi_minor, 2) - 1.0;
                CHECK(std::fabs(r) < 1e-9);
            }
        } catch (const DegenerateTriangle&) {
        } catch (const SingularMatrix&) {
        }
    }
}

TEST_CASE("eigen directions solve the quadratic form c3(y^2-x^2) + 2(c4-c5)xy") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int rep = 0; rep < 200; ++rep) {
        const double c3 = u(rng), c4 = u(rng), c5 = u(rng);
        const EigenSym2 e = eigen_sym2({2.0 * c4, c3, 2.0 * c5});
        for (const Vec2& dir : {e.u1, e.u2}) {
            const double q = c3 * (dir.y * dir.y - dir.x * dir.x) + 2.0 * (c4 - c5) * dir.x * dir.y;
            CHECK(std::fabs(q) < 1e-10);
        }
    }
}

TEST_CASE("Feuerbach hyperbola through the five named points") {
    const Triangle t = orbit_triangle(kShape, 7.0 * kPi / 180.0);
    const OriginHyperbola f = hyperbola_through(t.v[0], t.v[1], t.v[2]);
    for (const Vec2& p : t.v) CHECK(f.membership_residual(p) < 1e-12);
    CHECK(f.membership_residual(center(t, 1)) < 1e-12);
    CHECK(f.membership_residual(center(t, 9)) < 1e-12);   // the origin
    CHECK(f.membership_residual(center(t, 4)) < 1e-12);   // rectangular: contains X4
    CHECK(dist(f.center(), center(t, 11)) < 1e-11);
    CHECK(f.membership_residual(center(t, 1156)) < 1e-12);
}

TEST_CASE("excentral Jerabek through the excenters, X1, X9 and X40") {
    const Triangle t = orbit_triangle(kShape, 7.0 * kPi / 180.0);
    const Triangle exc = excentral(t);
    const OriginHyperbola j = hyperbola_through(exc.v[0], exc.v[1], exc.v[2]);
    for (const Vec2& p : exc.v) CHECK(j.membership_residual(p) < 1e-12);
    CHECK(j.membership_residual(center(t, 1)) < 1e-12);
    CHECK(j.membership_residual(center(t, 40)) < 1e-12);
    CHECK(dist(j.center(), center(t, 100)) < 1e-10);
}

TEST_CASE("both focal-length routes agree: eigen form vs 8 c1 c2 / c3^2") {
    for (double t : {0.17, 0.9, 2.6}) {
        const Triangle tri = orbit_triangle(kShape, t);
        const OriginHyperbola f = hyperbola_through(tri.v[0], tri.v[1], tri.v[2]);
        CHECK(axes(f.to_implicit()).focal_length == Approx(f.focal_length()).epsilon(1e-12));
        const Triangle exc = excentral(tri);
        const OriginHyperbola j = hyperbola_through(exc.v[0], exc.v[1], exc.v[2]);
        CHECK(axes(j.to_implicit()).focal_length == Approx(j.focal_length()).epsilon(1e-12));
    }
}

TEST_CASE("focal length ratio equals sqrt(2/rho)") {
    const FamilyConstants fam = family_constants(kShape);
    for (double t : {0.21, 0.9, 2.2, 3.8}) {
        const Triangle tri = orbit_triangle(kShape, t);
        const Triangle exc = excentral(tri);
        const double lam = hyperbola_through(tri.v[0], tri.v[1], tri.v[2]).focal_length();
        const double lamp = hyperbola_through(exc.v[0], exc.v[1], exc.v[2]).focal_length();
        CHECK(lamp / lam == Approx(std::sqrt(2.0 / fam.rho)).epsilon(1e-9));
        CHECK(lamp / lam > 2.0);
    }
}

TEST_CASE("isosceles orbit degenerates the Feuerbach hyperbola to a line pair") {
    const Orbit o = orbit_at(kShape, 0.0);
    CHECK_THROWS_AS(hyperbola_through(o.p1, o.p2, o.p3), DegenerateToLines);

    const OriginHyperbola h = hyperbola_through(o.p1, o.p2, o.p3, true);
    const CausticAxes c = caustic_axes(kShape);
    // pair x = -a_c and y = 0: coefficients proportional to (0, a_c, 1)
    CHECK(std::fabs(h.c1 / h.c3) < 1e-10);
    CHECK(h.c2 / h.c3 == Approx(c.a_c).epsilon(1e-10));
    CHECK(h.focal_length() < 1e-4);  // foci collapse
    CHECK(dist(h.center(), {-c.a_c, 0.0}) < 1e-10);
}

TEST_CASE("inconic of the 3-4-5 triangle centered at X1 is the incircle") {
    const Triangle t{{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}};
    const Inconic inc = inconic_with_center(t, center(t, 1), barycentric_fn(1));
    // (x-1)^2 + (y-1)^2 = 1  ->  1 - 2x - 2y + 0 + x^2 + y^2
    const ImplicitConic want{{1.0, -2.0, -2.0, 0.0, 1.0, 1.0}};
    CHECK(ebc_oracle::conic_match_up_to_scale(inc.conic, want) < 1e-12);
    CHECK(dist(inc.perspector, center(t, 7)) < 1e-12);
    CHECK(inc.is_ellipse);
    const MetricData m = metric(t);
    for (const Vec2& p : inc.contacts.v)
        CHECK(dist(p, center(t, 1)) == Approx(m.r).epsilon(1e-12));
}

TEST_CASE("X9-centered inconic of an orbit is the caustic with perspector X8") {
    const Triangle t = orbit_triangle(kShape, 0.44);
    const Inconic inc = inconic_with_center(t, center(t, 9), barycentric_fn(9));
    const CausticAxes c = caustic_axes(kShape);
    CHECK(inc.conic.c[4] / (-inc.conic.c[0]) == Approx(1.0 / (c.a_c * c.a_c)).epsilon(1e-11));
    CHECK(inc.conic.c[5] / (-inc.conic.c[0]) == Approx(1.0 / (c.b_c * c.b_c)).epsilon(1e-11));
    CHECK(std::fabs(inc.conic.c[1] / inc.conic.c[0]) < 1e-11);
    CHECK(std::fabs(inc.conic.c[2] / inc.conic.c[0]) < 1e-11);
    CHECK(std::fabs(inc.conic.c[3] / inc.conic.c[0]) < 1e-11);
    CHECK(dist(inc.perspector, center(t, 8)) < 1e-11);
}

TEST_CASE("orbit-X9-centered inconic of the excentral is the billiard") {
    const Triangle t = orbit_triangle(kShape, 0.44);
    const Triangle exc = excentral(t);
    // orbit X9 = excentral X6 = the origin
    const Inconic inc = inconic_with_center(exc, center(exc, 6), barycentric_fn(6));
    CHECK(inc.conic.c[4] / (-inc.conic.c[0]) ==
          Approx(1.0 / (kShape.a * kShape.a)).epsilon(1e-11));
    CHECK(inc.conic.c[5] / (-inc.conic.c[0]) ==
          Approx(1.0 / (kShape.b * kShape.b)).epsilon(1e-11));
    // contact points are the orbit vertices
    double worst = 1e300;
    for (const Vec2& q : inc.contacts.v) {
        double best = 1e300;
        for (const Vec2& p : t.v) best = std::min(best, dist(p, q));
        worst = std::min(worst, best);
        CHECK(best < 1e-10);
    }
}

TEST_CASE("inconic rejects a center function inconsistent with m") {
    const Triangle t{{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}};
    CHECK_THROWS_AS(inconic_with_center(t, center(t, 2), barycentric_fn(1)), NumericalFailure);
}

TEST_CASE("inconic with a center outside the shaded regions is flagged hyperbolic") {
    // MacBeath inconic of a strongly obtuse triangle: X5 leaves the four
    // ellipse regions, the conic comes out a hyperbola but stays tangent to
    // all three sidelines
    const Triangle t{{0.0, 0.0}, {4.0, 0.0}, {1.9, 0.45}};
    REQUIRE(classify_by_medial(t, center(t, 5)) == ConicClass::Hyperbola);
    const Inconic inc = inconic_with_center(t, center(t, 5), barycentric_fn(5));
    CHECK_FALSE(inc.is_ellipse);
    for (int i = 0; i < 3; ++i) {
        const Vec2& u = t.v[(i + 1) % 3];
        const Vec2 dir = t.v[(i + 2) % 3] - u;
        CHECK(std::fabs(line_discriminant(inc.conic, u, dir)) < 1e-9);
    }
}

TEST_CASE("classification by the medial regions") {
    const Triangle t = orbit_triangle(kShape, 0.61);
    CHECK(classify_by_medial(t, center(t, 9)) == ConicClass::Ellipse);
    CHECK(classify_by_medial(t, center(t, 1)) == ConicClass::Ellipse);
    CHECK(classify_by_medial(t, center(t, 11)) == ConicClass::Hyperbola);
    // excentral triangles are acute: X3 interior to their medial
    const Triangle exc = excentral(t);
    CHECK(classify_by_medial(exc, center(exc, 3)) == ConicClass::Ellipse);
    // a midpoint of two medial vertices sits on a midline
    const Triangle med = medial(t);
    CHECK(classify_by_medial(t, midpoint(med.v[0], med.v[1])) == ConicClass::Boundary);
}

TEST_CASE("medial-region verdicts agree with the Hessian sign") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int tested = 0;
    while (tested < 1000) {
        try {
            const Triangle t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
            if (t.area() < 0.1) continue;
            const Vec2 m{u(rng), u(rng)};
            const ConicClass cls = classify_by_medial(t, m);
            if (cls == ConicClass::Boundary) continue;
            const ImplicitConic g = circumconic_with_center(t, m);
            const bool ell = g.is_ellipse();
            CHECK(((cls == ConicClass::Ellipse) == ell));
            ++tested;
        } catch (const DegenerateTriangle&) {
        } catch (const SingularMatrix&) {
        }
    }
}

TEST_CASE("translate preserves the quadratic part and inverts exactly") {
    const ImplicitConic g{{-0.7, 0.0, 0.0, 1.0, 0.0, 0.0}};  // xy = 0.7
    const Vec2 v{1.3, -2.1};
    const ImplicitConic h = translate(g, v);
    CHECK(h.c[3] == g.c[3]);
    const ImplicitConic back = translate(h, -1.0 * v);
    for (int i = 0; i < 6; ++i) CHECK(back.c[i] == Approx(g.c[i]).margin(1e-12));
    // focal length unchanged
    CHECK(axes(h).focal_length == Approx(axes(g).focal_length).epsilon(1e-12));
}

TEST_CASE("asymptote parallelism: c4, c5 vanish for F and J_exc as general conics") {
    const Triangle t = orbit_triangle(kShape, 0.37);
    const Triangle exc = excentral(t);
    const ImplicitConic f = circumconic_with_center(t, center(t, 11)).normalized();
    const ImplicitConic j = circumconic_with_center(exc, center(t, 100)).normalized();
    CHECK(std::fabs(f.c[4]) < 1e-10 * f.coeff_norm());
    CHECK(std::fabs(f.c[5]) < 1e-10 * f.coeff_norm());
    CHECK(std::fabs(j.c[4]) < 1e-10 * j.coeff_norm());
    CHECK(std::fabs(j.c[5]) < 1e-10 * j.coeff_norm());
}

TEST_CASE("axis parallelism of the elementary circumellipses") {
    // E1 parallel to E9 always; E2 parallel to E9 exactly for isosceles
    for (auto [u, v] : {std::pair{0.7, 0.9}, std::pair{-0.3, 1.7}, std::pair{1.5, 0.8}}) {
        const ebc_oracle::ElementaryConics ec(u, v);
        CHECK(ebc_oracle::axes_frame_angle(ec.e1(), ec.e9()) < 1e-9);
        CHECK(ebc_oracle::axes_frame_angle(ec.e2(), ec.e9()) > 1e-6);  // scalene samples
    }
    for (auto [u, v] : {std::pair{0.5, 0.8},                       // s1 = s2
                        std::pair{0.36, std::sqrt(1.0 - 0.1296)},  // s2 = s3 = 1
                        std::pair{0.64, std::sqrt(1.0 - 0.1296)}}) {  // s1 = 1
        const ebc_oracle::ElementaryConics ec(u, v);
        CHECK(ebc_oracle::axes_frame_angle(ec.e2(), ec.e9()) < 1e-9);
    }
}

TEST_CASE("focal length maxima: translated hyperbolas touch their conics at X11/X100") {
    const auto maxima = focal_length_maxima(kShape);
    REQUIRE(maxima.size() == 3);
    const CausticAxes c = caustic_axes(kShape);
    const ImplicitConic caustic{{-1.0, 0.0, 0.0, 0.0, 1.0 / (c.a_c * c.a_c),
                                 1.0 / (c.b_c * c.b_c)}};
    const ImplicitConic eb{{-1.0, 0.0, 0.0, 0.0, 1.0 / (kShape.a * kShape.a),
                            1.0 / (kShape.b * kShape.b)}};
    for (double tm : maxima) {
        const Triangle tri = orbit_triangle(kShape, tm);
        const Triangle exc = excentral(tri);
        const Vec2 x11 = center(tri, 11);
        const Vec2 x100 = center(tri, 100);
        const Vec2 x1156 = center(tri, 1156);

        const ImplicitConic fp =
            translate(hyperbola_through(tri.v[0], tri.v[1], tri.v[2]).to_implicit(), -1.0 * x11);
        const ImplicitConic jp =
            translate(hyperbola_through(exc.v[0], exc.v[1], exc.v[2]).to_implicit(),
                      -1.0 * x100);

        for (double sgn : {1.0, -1.0}) {
            CHECK(tangent_at(fp, caustic, sgn * x11));
            CHECK(tangent_at(jp, eb, sgn * x100));
        }
        // J' meets the billiard at X1156 = -X100
        CHECK(membership_residual(jp, x1156) < 1e-9);
        CHECK(dist(x1156, -1.0 * x100) < 1e-9);
    }
}
