#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ebc/invariants.hpp"

using namespace ebc;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const BilliardShape kShape{1.5, 1.0};
const double kPhi = 0.5 * (1.0 + std::sqrt(5.0));

double shape_k(const BilliardShape& s) {
    return (2.0 * s.delta() - s.a * s.a - s.b * s.b) / (s.a * s.a - s.b * s.b);
}
}  // namespace

TEST_CASE("full claim sweep passes at a/b = 1.5") {
    const SweepReport rep = sweep(kShape, 360);
    REQUIRE(rep.claims.size() == claim_catalog().size());
    for (const auto& c : rep.claims) {
        INFO(c.id << " deviation " << c.max_deviation << " tol " << c.tolerance);
        CHECK(c.pass);
        CHECK_FALSE(c.flagged_exclusions);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("claim ids are unique") {
    std::vector<std::string> ids;
    for (const auto& [id, desc] : claim_catalog()) ids.push_back(id);
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("all claims hold below the obtuse threshold too (a/b = 1.25)") {
    const SweepReport rep = sweep(BilliardShape{1.25, 1.0}, 36);
    for (const auto& c : rep.claims) {
        INFO(c.id << " deviation " << c.max_deviation);
        CHECK(c.pass);
    }
}

TEST_CASE("claim verdicts are sample-count independent (360 vs 720)") {
    const SweepReport a = sweep(kShape, 360);
    const SweepReport b = sweep(kShape, 720);
    REQUIRE(a.claims.size() == b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(a.claims[i].id == b.claims[i].id);
        CHECK(a.claims[i].pass == b.claims[i].pass);
    }
}

TEST_CASE("selected claim subset only evaluates those claims") {
    const SweepReport rep = sweep(kShape, 48, {"perimeter", "mu5_ratio"});
    REQUIRE(rep.claims.size() == 2);
    CHECK(rep.claims[0].id == "perimeter");
    CHECK(rep.claims[1].id == "mu5_ratio");
    CHECK(rep.all_pass());
}

TEST_CASE("specific claim values match the frozen closed forms at a/b = 1.5") {
    // eta1'/eta1 = (1+sqrt(1-2 rho))/rho - 1, lambda'/lambda = sqrt(2/rho),
    // mu5'/mu5 = 1/sqrt(2 rho); frozen from 50-digit evaluation
    const FamilyConstants fam = family_constants(kShape);
    CHECK((1.0 + std::sqrt(1.0 - 2.0 * fam.rho)) / fam.rho - 1.0 ==
          Approx(3.2025624189766636).epsilon(1e-14));
    CHECK(std::sqrt(2.0 / fam.rho) == Approx(2.3483637671720052).epsilon(1e-14));
    CHECK(1.0 / std::sqrt(2.0 * fam.rho) == Approx(1.1741818835860026).epsilon(1e-14));
    CHECK(std::sqrt(2.0 / fam.rho) > 2.0);

    const SweepReport rep = sweep(kShape, 72, {"eta1_ratio", "lambda_ratio", "mu5_ratio"});
    for (const auto& c : rep.claims) CHECK(c.max_deviation < 1e-12);
}

TEST_CASE("mirror symmetry of measurements at t and -t") {
    for (double t : {0.31, 1.07, 2.6}) {
        const Orbit a = orbit_at(kShape, t);
        const Orbit b = orbit_at(kShape, -t);
        const Triangle ta{a.p1, a.p2, a.p3};
        const Triangle tb{b.p1, b.p2, b.p3};
        for (int idx : {1, 7, 11, 100, 1156}) {
            const Vec2 pa = center(ta, idx);
            const Vec2 pb = center(tb, idx);
            CHECK(std::fabs(pa.x - pb.x) < 1e-10);
            CHECK(std::fabs(pa.y + pb.y) < 1e-10);
        }
        CHECK(std::fabs(metric(ta).r - metric(tb).r) < 1e-10);
    }
}

TEST_CASE("isosceles exclusion hits exactly four triangles, each at three seeds") {
    // the four isosceles members are seeded at (+-a, 0) and (0, +-b); each is
    // met at three parameters of the sweep, so twelve t neighborhoods per turn
    std::vector<double> iso_ts;
    for (double seed : {0.0, kPi / 2.0, kPi, 1.5 * kPi}) {
        const Orbit o = orbit_at(kShape, seed);
        for (const Vec2& v : {o.p1, o.p2, o.p3})
            iso_ts.push_back(boundary_parameter(kShape, v));
    }
    std::sort(iso_ts.begin(), iso_ts.end());
    REQUIRE(iso_ts.size() == 12);
    for (std::size_t i = 1; i < iso_ts.size(); ++i)
        CHECK(iso_ts[i] - iso_ts[i - 1] > 1e-3);  // twelve distinct neighborhoods

    const double tol_iso = tolerances().isosceles_rel;
    for (double t : iso_ts) {
        const Orbit o = orbit_at(kShape, t);
        CHECK(Triangle{o.p1, o.p2, o.p3}.is_isosceles(tol_iso));
    }
    // midpoints between consecutive isosceles parameters are scalene
    for (std::size_t i = 0; i < iso_ts.size(); ++i) {
        const double lo = iso_ts[i];
        const double hi = (i + 1 < iso_ts.size()) ? iso_ts[i + 1] : iso_ts[0] + 2.0 * kPi;
        const Orbit o = orbit_at(kShape, 0.5 * (lo + hi));
        CHECK_FALSE(Triangle{o.p1, o.p2, o.p3}.is_isosceles(tol_iso));
    }
}

TEST_CASE("locus of X7 is an ellipse with axes k(a,b)") {
    for (double ab : {1.5, kPhi}) {
        const BilliardShape s{ab, 1.0};
        const LocusFit fit = locus(s, 7, 180);
        const double k = shape_k(s);
        CHECK(fit.verdict == LocusVerdict::Elliptic);
        CHECK(fit.fitted_a == Approx(k * s.a).epsilon(1e-8));
        CHECK(fit.fitted_b == Approx(k * s.b).epsilon(1e-8));
    }
}

TEST_CASE("locus of X142 is an ellipse with axes k(a,b)/2") {
    for (double ab : {1.5, kPhi}) {
        const BilliardShape s{ab, 1.0};
        const LocusFit fit = locus(s, 142, 180);
        const double k = shape_k(s);
        CHECK(fit.verdict == LocusVerdict::Elliptic);
        CHECK(fit.fitted_a == Approx(0.5 * k * s.a).epsilon(1e-8));
        CHECK(fit.fitted_b == Approx(0.5 * k * s.b).epsilon(1e-8));
    }
}

TEST_CASE("excenter locus matches (a_e, b_e); its major axis is vertical") {
    for (double ab : {1.5, kPhi}) {
        const BilliardShape s{ab, 1.0};
        const LocusFit fit = locus(s, 0, 180);
        const double dl = s.delta();
        CHECK(fit.verdict == LocusVerdict::Elliptic);
        CHECK(fit.fitted_a == Approx((s.b * s.b + dl) / s.a).epsilon(1e-8));
        CHECK(fit.fitted_b == Approx((s.a * s.a + dl) / s.b).epsilon(1e-8));
        CHECK(fit.fitted_b > fit.fitted_a);  // 90-degree rotated against the billiard
    }
}

TEST_CASE("locus of X1 is elliptic, X9 is stationary") {
    CHECK(locus(kShape, 1, 120).verdict == LocusVerdict::Elliptic);
    CHECK(locus(kShape, 9, 120).verdict == LocusVerdict::Stationary);
}

TEST_CASE("locus of X168 is non-elliptic with a residual plateau") {
    for (double ab : {1.5, kPhi}) {
        const BilliardShape s{ab, 1.0};
        const LocusFit fit = locus(s, 168, 180);
        CHECK(fit.verdict == LocusVerdict::NonElliptic);
        CHECK(fit.rms_residual > 1e-4);
        CHECK(fit.rms_refined > 1e-4);
        // plateau, not decay, under refinement
        CHECK(fit.rms_refined > 0.5 * fit.rms_residual);
    }
}

TEST_CASE("elliptic locus residuals stay below threshold under refinement") {
    const LocusFit fit = locus(kShape, 7, 90);
    CHECK(fit.rms_residual < 1e-7);
    CHECK(fit.rms_refined < 1e-7);
}

TEST_CASE("pencil members pass through X100 with billiard-parallel axes") {
    const auto entries = pencil_check(kShape, 0.53);
    REQUIRE(entries.size() == 5);
    const FamilyConstants fam = family_constants(kShape);
    for (const auto& e : entries) {
        CHECK(e.through_x100 < 1e-9);
        if (!e.axis_exempt) CHECK(e.axis_parallel < 1e-9);
        if (e.center_index == 1)
            CHECK(e.aspect_ratio ==
                  Approx((1.0 + std::sqrt(1.0 - 2.0 * fam.rho)) / fam.rho - 1.0).epsilon(1e-10));
        if (e.center_index == 9)
            CHECK(e.aspect_ratio == Approx(kShape.a / kShape.b).epsilon(1e-10));
        if (e.center_index == 3) CHECK(e.aspect_ratio == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("conjecture evidence: pencil aspect ratios are numerically conserved") {
    const SweepReport rep = sweep(kShape, 90, {"pencil_axis_parallel", "pencil_through_x100"});
    int found = 0;
    for (const auto& ev : rep.evidence) {
        if (ev.id.rfind("pencil_aspect_x", 0) == 0) {
            ++found;
            CHECK(std::isfinite(ev.mean));
            CHECK(std::isfinite(ev.stddev));
            CHECK(ev.stddev < 1e-10 * ev.mean);  // observed conservation, reported only
        }
    }
    CHECK(found == 3);
}

TEST_CASE("superposition report at a/b = phi, t = 7 degrees") {
    const SuperpositionReport rep =
        superposition_checks(BilliardShape{kPhi, 1.0}, 7.0 * kPi / 180.0);
    CHECK(rep.act_intouch_on_eb < 1e-9);
    CHECK(rep.orbit_intouch_on_medial < 1e-9);
    CHECK(rep.collinear < 1e-9);
    CHECK(rep.ratio_dev < 1e-8);
}

TEST_CASE("superposition survives the near-circular limit a/b = 1.001") {
    const SuperpositionReport rep = superposition_checks(BilliardShape{1.001, 1.0}, 0.37);
    CHECK(rep.act_intouch_on_eb < 1e-6);
    CHECK(rep.orbit_intouch_on_medial < 1e-6);
}

TEST_CASE("three focal-length maxima per quarter period") {
    const auto maxima = focal_length_maxima(kShape);
    REQUIRE(maxima.size() == 3);
    for (double t : maxima) {
        CHECK(t > 0.0);
        CHECK(t < kPi / 2.0);
    }
    CHECK(maxima[0] < maxima[1]);
    CHECK(maxima[1] < maxima[2]);
}
