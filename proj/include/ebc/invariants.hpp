#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebc/billiard.hpp"
#include "ebc/centers.hpp"
#include "ebc/conic.hpp"
#include "ebc/triangle.hpp"

namespace ebc {

// ---------------------------------------------------------------------------
// per-sample measurements over the orbit family
// ---------------------------------------------------------------------------

struct SweepSample {
    double t = 0.0;
    bool isosceles = false;
    double perimeter = 0.0;
    double r = 0.0, R = 0.0, d = 0.0;
    double eta1_major = 0.0, eta1_minor = 0.0;          // X1-centered circumellipse
    double lambda_f = 0.0, lambda_jexc = 0.0;           // hyperbola focal lengths
    double mu3_major = 0.0, mu3_minor = 0.0;            // excentral X3-centered inconic
    double mu5_major = 0.0, mu5_minor = 0.0;            // excentral MacBeath inconic
    Vec2 x100, x1156;
};

struct ClaimResult {
    std::string id;
    std::string description;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    int excluded = 0;
    bool pass = false;
    bool flagged_exclusions = false;  // more than 1% of samples excluded
};

struct Evidence {  // reported, never asserted
    std::string id;
    double mean = 0.0;
    double stddev = 0.0;
    double max_abs = 0.0;
};

struct SweepReport {
    double a = 0.0, b = 0.0;
    int n_samples = 0;
    std::vector<SweepSample> samples;
    std::vector<ClaimResult> claims;
    std::vector<Evidence> evidence;

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

inline const std::vector<std::pair<std::string, std::string>>& claim_catalog() {
    static const std::vector<std::pair<std::string, std::string>> ids = {
        {"perimeter", "orbit perimeter equals the family constant L"},
        {"r_over_R", "inradius-to-circumradius ratio equals rho"},
        {"mittenpunkt", "X9 stays at the billiard center"},
        {"caustic_tangency", "orbit sides stay tangent to the caustic"},
        {"eta1_major", "X1-circumellipse major semi-axis equals R+d"},
        {"eta1_minor", "X1-circumellipse minor semi-axis equals R-d"},
        {"eta1_ratio", "X1-circumellipse aspect equals (1+sqrt(1-2rho))/rho-1"},
        {"e1_axis_parallel", "X1-circumellipse axes parallel to the billiard"},
        {"lambda_ratio", "focal-length ratio lambda'/lambda equals sqrt(2/rho)"},
        {"f_asymptotes", "Feuerbach hyperbola keeps axis-parallel asymptotes"},
        {"jexc_asymptotes", "excentral Jerabek keeps axis-parallel asymptotes"},
        {"mu3_major", "excentral X3-inconic major semi-axis equals R+d"},
        {"mu3_minor", "excentral X3-inconic minor semi-axis equals R-d"},
        {"mu3_axis_parallel", "excentral X3-inconic axes parallel to the billiard"},
        {"i3exc_through_x100", "excentral X3-inconic passes through X100"},
        {"mu5_major", "excentral MacBeath inconic major semi-axis equals R"},
        {"mu5_minor", "excentral MacBeath inconic minor semi-axis equals sqrt(R^2-d^2)"},
        {"mu5_ratio", "excentral MacBeath inconic aspect equals 1/sqrt(2 rho)"},
        {"x100_on_eb", "X100 lies on the billiard"},
        {"x100_on_circumcircle", "X100 lies on the circumcircle"},
        {"x100_on_e1", "X100 lies on the X1-centered circumellipse"},
        {"x1156_on_eb", "X1156 lies on the billiard"},
        {"x1156_on_f", "X1156 lies on the Feuerbach hyperbola"},
        {"act_intouch_on_eb", "anticomplementary intouch points lie on the billiard"},
        {"orbit_intouch_on_medial_cb", "orbit intouch points lie on the medial circumbilliard"},
        {"l27_collinear", "X7, X142, X2, X9, X144 are collinear"},
        {"l27_ratios", "consecutive distances on L(2,7) are 3:1:2:6"},
        {"pencil_axis_parallel", "X1/X10/X142 circumellipses axis-parallel to the billiard"},
        {"pencil_through_x100", "pencil circumellipses pass through X100"},
    };
    return ids;
}

namespace detail {

struct ClaimAccumulator {
    double max_dev = 0.0;
    int samples = 0;
    int excluded = 0;
    void add(double dev) {
        max_dev = std::max(max_dev, dev);
        ++samples;
    }
    void exclude() { ++excluded; }
};

inline double rel_dev(double measured, double expected) {
    return std::fabs(measured - expected) / std::fabs(expected);
}

inline double axis_parallel_angle(const Vec2& dir) {
    // angle to the nearest coordinate axis
    return std::min(line_angle(dir, {1.0, 0.0}), line_angle(dir, {0.0, 1.0}));
}

}  // namespace detail

// Claim sweep over n samples t_i = 2*pi*(i + 1/2)/n. Isosceles samples are
// excluded from the hyperbola claims only.
inline SweepReport sweep(const BilliardShape& shape, int n,
                         const std::vector<std::string>& claim_ids = {},
                         const Tolerances& tol = tolerances()) {
    const FamilyConstants fam = family_constants(shape, tol);
    const CausticAxes ca = caustic_axes(shape, tol);
    const double rho = fam.rho;
    const double eta_ratio_expected = (1.0 + std::sqrt(1.0 - 2.0 * rho)) / rho - 1.0;
    const double lambda_ratio_expected = std::sqrt(2.0 / rho);
    const double mu5_ratio_expected = 1.0 / std::sqrt(2.0 * rho);

    for (const auto& requested : claim_ids) {
        if (requested == "all") continue;
        bool known = false;
        for (const auto& [id, desc] : claim_catalog()) known = known || id == requested;
        if (!known) throw std::invalid_argument("sweep: unknown claim id '" + requested + "'");
    }
    const auto selected = [&](const std::string& id) {
        if (claim_ids.empty()) return true;
        for (const auto& c : claim_ids)
            if (c == id || c == "all") return true;
        return false;
    };

    std::map<std::string, detail::ClaimAccumulator> acc;
    for (const auto& [id, desc] : claim_catalog())
        if (selected(id)) acc[id];

    const ImplicitConic eb{{-1.0, 0.0, 0.0, 0.0, 1.0 / (shape.a * shape.a),
                            1.0 / (shape.b * shape.b)}};

    SweepReport rep;
    rep.a = shape.a;
    rep.b = shape.b;
    rep.n_samples = n;

    std::map<std::string, std::vector<double>> pencil_aspect;  // conjecture evidence
    std::vector<double> x190_eb, x190_e2, x664_e1, x664_e2;

    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / n;
        const Orbit orb = orbit_at(shape, t, tol);
        const Triangle tri{orb.p1, orb.p2, orb.p3, tol};
        const Triangle exc = excentral(tri);
        const MetricData met = metric(tri);
        const Vec2 x1 = center(tri, 1, tol);
        const Vec2 x3 = center(tri, 3, tol);
        const double d = dist(x1, x3);
        const bool iso = tri.is_isosceles(tol.isosceles_rel);

        SweepSample smp;
        smp.t = t;
        smp.isosceles = iso;
        smp.perimeter = orb.perimeter();
        smp.r = met.r;
        smp.R = met.R;
        smp.d = d;

        if (acc.count("perimeter"))
            acc["perimeter"].add(std::fabs(orb.perimeter() - fam.perimeter) / fam.perimeter);
        if (acc.count("r_over_R")) acc["r_over_R"].add(std::fabs(met.r / met.R - rho));
        if (acc.count("mittenpunkt"))
            acc["mittenpunkt"].add(norm(center(tri, 9, tol)) / shape.b);
        if (acc.count("caustic_tangency")) {
            double worst = 0.0;
            for (int k = 0; k < 3; ++k)
                worst = std::max(worst, std::fabs(caustic_tangency_residual(
                                            ca, tri.v[(k + 1) % 3], tri.v[(k + 2) % 3])));
            acc["caustic_tangency"].add(worst);
        }

        const bool need_e1 = acc.count("eta1_major") || acc.count("eta1_minor") ||
                             acc.count("eta1_ratio") || acc.count("e1_axis_parallel") ||
                             acc.count("x100_on_e1");
        std::optional<ImplicitConic> e1;
        std::optional<ConicAxes> e1_axes;
        if (need_e1) {
            e1 = circumconic_with_center(tri, x1, tol);
            e1_axes = axes(*e1, tol);
            smp.eta1_major = e1_axes->semi_major;
            smp.eta1_minor = e1_axes->semi_minor;
            if (acc.count("eta1_major"))
                acc["eta1_major"].add(detail::rel_dev(e1_axes->semi_major, met.R + d));
            if (acc.count("eta1_minor"))
                acc["eta1_minor"].add(detail::rel_dev(e1_axes->semi_minor, met.R - d));
            if (acc.count("eta1_ratio"))
                acc["eta1_ratio"].add(
                    detail::rel_dev(e1_axes->aspect_ratio(), eta_ratio_expected));
            if (acc.count("e1_axis_parallel"))
                acc["e1_axis_parallel"].add(detail::axis_parallel_angle(e1_axes->major_direction));
        }

        const Vec2 x100 = center(tri, 100, tol);
        const Vec2 x1156 = center(tri, 1156, tol);
        smp.x100 = x100;
        smp.x1156 = x1156;
        if (acc.count("x100_on_eb")) acc["x100_on_eb"].add(membership_residual(eb, x100));
        if (acc.count("x100_on_circumcircle"))
            acc["x100_on_circumcircle"].add(std::fabs(dist(x100, x3) - met.R) / met.R);
        if (acc.count("x100_on_e1") && e1) acc["x100_on_e1"].add(membership_residual(*e1, x100));
        if (acc.count("x1156_on_eb")) acc["x1156_on_eb"].add(membership_residual(eb, x1156));

        // hyperbola claims: isosceles samples excluded
        const bool need_hyp = acc.count("lambda_ratio") || acc.count("f_asymptotes") ||
                              acc.count("jexc_asymptotes") || acc.count("x1156_on_f");
        if (need_hyp) {
            if (iso) {
                for (const char* id :
                     {"lambda_ratio", "f_asymptotes", "jexc_asymptotes", "x1156_on_f"})
                    if (acc.count(id)) acc[id].exclude();
            } else {
                const OriginHyperbola f = hyperbola_through(tri.v[0], tri.v[1], tri.v[2], false, tol);
                const OriginHyperbola jx = hyperbola_through(exc.v[0], exc.v[1], exc.v[2], false, tol);
                smp.lambda_f = f.focal_length();
                smp.lambda_jexc = jx.focal_length();
                if (acc.count("lambda_ratio"))
                    acc["lambda_ratio"].add(detail::rel_dev(
                        smp.lambda_jexc / smp.lambda_f, lambda_ratio_expected));
                if (acc.count("x1156_on_f"))
                    acc["x1156_on_f"].add(f.membership_residual(x1156));
                if (acc.count("f_asymptotes")) {
                    const ImplicitConic fc =
                        circumconic_with_center(tri, center(tri, 11, tol), tol).normalized();
                    acc["f_asymptotes"].add(
                        std::max(std::fabs(fc.c[4]), std::fabs(fc.c[5])) / fc.coeff_norm());
                }
                if (acc.count("jexc_asymptotes")) {
                    const ImplicitConic jc =
                        circumconic_with_center(exc, x100, tol).normalized();
                    acc["jexc_asymptotes"].add(
                        std::max(std::fabs(jc.c[4]), std::fabs(jc.c[5])) / jc.coeff_norm());
                }
            }
        }

        // excentral inconics
        const bool need_i3 = acc.count("mu3_major") || acc.count("mu3_minor") ||
                             acc.count("mu3_axis_parallel") || acc.count("i3exc_through_x100");
        if (need_i3) {
            const Inconic i3 = inconic_with_center(exc, center(exc, 3, tol), barycentric_fn(3), tol);
            const ConicAxes ax = axes(i3.conic, tol);
            smp.mu3_major = ax.semi_major;
            smp.mu3_minor = ax.semi_minor;
            if (acc.count("mu3_major")) acc["mu3_major"].add(detail::rel_dev(ax.semi_major, met.R + d));
            if (acc.count("mu3_minor")) acc["mu3_minor"].add(detail::rel_dev(ax.semi_minor, met.R - d));
            if (acc.count("mu3_axis_parallel"))
                acc["mu3_axis_parallel"].add(detail::axis_parallel_angle(ax.major_direction));
            if (acc.count("i3exc_through_x100"))
                acc["i3exc_through_x100"].add(membership_residual(i3.conic, x100));
        }
        const bool need_i5 = acc.count("mu5_major") || acc.count("mu5_minor") ||
                             acc.count("mu5_ratio");
        if (need_i5) {
            const Inconic i5 = inconic_with_center(exc, center(exc, 5, tol), barycentric_fn(5), tol);
            const ConicAxes ax = axes(i5.conic, tol);
            smp.mu5_major = ax.semi_major;
            smp.mu5_minor = ax.semi_minor;
            if (acc.count("mu5_major")) acc["mu5_major"].add(detail::rel_dev(ax.semi_major, met.R));
            if (acc.count("mu5_minor"))
                acc["mu5_minor"].add(
                    detail::rel_dev(ax.semi_minor, std::sqrt(met.R * met.R - d * d)));
            if (acc.count("mu5_ratio"))
                acc["mu5_ratio"].add(detail::rel_dev(ax.aspect_ratio(), mu5_ratio_expected));
        }

        // superposition memberships
        if (acc.count("act_intouch_on_eb")) {
            const Triangle act = anticomplementary(tri);
            const Triangle touch = cevian_triangle(act, center(act, 7, tol), tol);
            double worst = 0.0;
            for (const Vec2& p : touch.v) worst = std::max(worst, membership_residual(eb, p));
            acc["act_intouch_on_eb"].add(worst);
        }
        if (acc.count("orbit_intouch_on_medial_cb")) {
            const Triangle med = medial(tri);
            const ImplicitConic medcb = circumconic_with_center(med, center(med, 9, tol), tol);
            const Triangle touch = cevian_triangle(tri, center(tri, 7, tol), tol);
            double worst = 0.0;
            for (const Vec2& p : touch.v) worst = std::max(worst, membership_residual(medcb, p));
            acc["orbit_intouch_on_medial_cb"].add(worst);
        }

        // line L(2,7)
        if (acc.count("l27_collinear") || acc.count("l27_ratios")) {
            const Vec2 x7 = center(tri, 7, tol);
            const Vec2 x142 = center(tri, 142, tol);
            const Vec2 x2 = center(tri, 2, tol);
            const Vec2 x9 = center(tri, 9, tol);
            const Vec2 x144 = center(tri, 144, tol);
            const std::array<Vec2, 5> pts = {x7, x142, x2, x9, x144};
            if (acc.count("l27_collinear")) {
                const Vec2 dir = normalized(x144 - x7);
                double worst = 0.0;
                for (const Vec2& p : pts)
                    worst = std::max(worst, std::fabs(cross(dir, p - x7)) / shape.b);
                acc["l27_collinear"].add(worst);
            }
            if (acc.count("l27_ratios")) {
                const std::array<double, 4> want = {3.0, 1.0, 2.0, 6.0};
                double worst = 0.0;
                const double unit = dist(pts[0], pts[1]) / want[0];
                for (int k = 1; k < 4; ++k)
                    worst = std::max(worst, detail::rel_dev(dist(pts[k], pts[k + 1]) / unit, want[k]));
                acc["l27_ratios"].add(worst);
            }
        }

        // parallel-axis pencil (the conjecture evidence rides along)
        if (acc.count("pencil_axis_parallel") || acc.count("pencil_through_x100")) {
            for (int idx : {1, 3, 9, 10, 142}) {
                const Vec2 m = center(tri, idx, tol);
                const ImplicitConic e = circumconic_with_center(tri, m, tol);
                if (acc.count("pencil_through_x100"))
                    acc["pencil_through_x100"].add(membership_residual(e, x100));
                if (idx != 3 && idx != 9) {
                    const ConicAxes ax = axes(e, tol);
                    if (acc.count("pencil_axis_parallel"))
                        acc["pencil_axis_parallel"].add(
                            detail::axis_parallel_angle(ax.major_direction));
                    if (idx == 1 || idx == 10 || idx == 142)
                        pencil_aspect[std::to_string(idx)].push_back(ax.aspect_ratio());
                }
            }
            if (!iso) {  // X190 and X664 have (s2-s3) factors, undefined when isosceles
                const Vec2 x190 = center(tri, 190, tol);
                const Vec2 x664 = center(tri, 664, tol);
                const ImplicitConic e2 = circumconic_with_center(tri, center(tri, 2, tol), tol);
                x190_eb.push_back(membership_residual(eb, x190));
                x190_e2.push_back(membership_residual(e2, x190));
                if (e1) {
                    x664_e1.push_back(membership_residual(*e1, x664));
                    x664_e2.push_back(membership_residual(e2, x664));
                }
            }
        }

        rep.samples.push_back(smp);
    }

    for (const auto& [id, desc] : claim_catalog()) {
        auto it = acc.find(id);
        if (it == acc.end()) continue;
        ClaimResult cr;
        cr.id = id;
        cr.description = desc;
        cr.max_deviation = it->second.max_dev;
        cr.samples = it->second.samples;
        cr.excluded = it->second.excluded;
        if (id == "perimeter" || id == "r_over_R")
            cr.tolerance = tol.perimeter_rel;
        else if (id == "mittenpunkt" || id == "caustic_tangency")
            cr.tolerance = tol.claim_membership;
        else if (id == "f_asymptotes" || id == "jexc_asymptotes")
            cr.tolerance = tol.asymptote_rel;
        else if (id.find("_on_") != std::string::npos || id == "i3exc_through_x100" ||
                 id == "pencil_through_x100" || id == "l27_collinear")
            cr.tolerance = tol.claim_membership;
        else if (id.find("axis_parallel") != std::string::npos)
            cr.tolerance = tol.axis_parallel_rad;
        else
            cr.tolerance = tol.claim_ratio_rel;
        cr.pass = cr.max_deviation < cr.tolerance;
        cr.flagged_exclusions =
            cr.excluded > 0 && 100 * cr.excluded > (cr.samples + cr.excluded);
        rep.claims.push_back(cr);
    }

    const auto push_evidence = [&rep](const std::string& id, const std::vector<double>& vals) {
        if (vals.empty()) return;
        Evidence ev;
        ev.id = id;
        double s = 0.0, mx = 0.0;
        for (double v : vals) {
            s += v;
            mx = std::max(mx, std::fabs(v));
        }
        ev.mean = s / static_cast<double>(vals.size());
        double ss = 0.0;
        for (double v : vals) ss += (v - ev.mean) * (v - ev.mean);
        ev.stddev = std::sqrt(ss / static_cast<double>(vals.size()));
        ev.max_abs = mx;
        rep.evidence.push_back(ev);
    };
    for (const auto& [idx, vals] : pencil_aspect) push_evidence("pencil_aspect_x" + idx, vals);
    push_evidence("x190_on_eb", x190_eb);
    push_evidence("x190_on_e2", x190_e2);
    push_evidence("x664_on_e1", x664_e1);
    push_evidence("x664_on_e2", x664_e2);
    return rep;
}

// ---------------------------------------------------------------------------
// locus classification
// ---------------------------------------------------------------------------

enum class LocusVerdict { Elliptic, NonElliptic, Stationary };

struct LocusFit {
    int center_index = 0;  // 0 stands for the excenter locus
    std::vector<Vec2> points;
    double fitted_a = 0.0, fitted_b = 0.0;  // x^2/A^2 + y^2/B^2 = 1
    double rms_residual = 0.0;
    double rms_refined = 0.0;  // at twice the sample count
    LocusVerdict verdict = LocusVerdict::NonElliptic;
};

namespace detail {

inline std::vector<Vec2> locus_points(const BilliardShape& shape, int center_index, int n,
                                      const Tolerances& tol) {
    std::vector<Vec2> pts;
    pts.reserve(center_index == 0 ? 3 * n : n);
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / n;
        const Orbit orb = orbit_at(shape, t, tol);
        const Triangle tri{orb.p1, orb.p2, orb.p3, tol};
        if (center_index == 0) {
            const Triangle exc = excentral(tri);
            for (const Vec2& p : exc.v) pts.push_back(p);
        } else {
            pts.push_back(center(tri, center_index, tol));
        }
    }
    return pts;
}

struct AxisFit {
    double A = 0.0, B = 0.0, rms = 0.0;
};

inline AxisFit fit_axis_aligned_ellipse(const std::vector<Vec2>& pts, const Tolerances& tol) {
    std::vector<std::vector<double>> design;
    std::vector<double> target(pts.size(), 1.0);
    design.reserve(pts.size());
    for (const Vec2& p : pts) design.push_back({p.x * p.x, p.y * p.y});
    const LsqResult ls = lsq_fit(design, target, tol);
    AxisFit out;
    out.rms = ls.rms_residual;
    out.A = ls.coeffs[0] > 0.0 ? 1.0 / std::sqrt(ls.coeffs[0]) : 0.0;
    out.B = ls.coeffs[1] > 0.0 ? 1.0 / std::sqrt(ls.coeffs[1]) : 0.0;
    return out;
}

}  // namespace detail

// Least-squares zero-centered axis-aligned ellipse fit of the locus of a
// center over the family; verdict requires stability under 2x refinement.
inline LocusFit locus(const BilliardShape& shape, int center_index, int n,
                      const Tolerances& tol = tolerances()) {
    LocusFit out;
    out.center_index = center_index;
    out.points = detail::locus_points(shape, center_index, n, tol);

    double extent = 0.0;
    for (const Vec2& p : out.points) extent = std::max(extent, norm(p));
    if (extent < 1e-9 * shape.a) {
        out.verdict = LocusVerdict::Stationary;
        return out;
    }

    const auto fit1 = detail::fit_axis_aligned_ellipse(out.points, tol);
    const auto fit2 = detail::fit_axis_aligned_ellipse(
        detail::locus_points(shape, center_index, 2 * n, tol), tol);
    out.fitted_a = fit1.A;
    out.fitted_b = fit1.B;
    out.rms_residual = fit1.rms;
    out.rms_refined = fit2.rms;

    const double eps = tol.locus_residual * shape.b;
    out.verdict = (fit1.rms < eps && fit2.rms < eps) ? LocusVerdict::Elliptic
                                                     : LocusVerdict::NonElliptic;
    return out;
}

// ---------------------------------------------------------------------------
// single-configuration reports (pencil and superposition)
// ---------------------------------------------------------------------------

struct PencilEntry {
    int center_index = 0;
    double through_x100 = 0.0;    // membership residual
    double axis_parallel = 0.0;   // angle to the nearest billiard axis
    double aspect_ratio = 0.0;
    bool axis_exempt = false;     // X3 (circumcircle) and X9 (the billiard itself)
};

inline std::vector<PencilEntry> pencil_check(const BilliardShape& shape, double t,
                                             const std::vector<int>& indices = {1, 3, 9, 10, 142},
                                             const Tolerances& tol = tolerances()) {
    const Orbit orb = orbit_at(shape, t, tol);
    const Triangle tri{orb.p1, orb.p2, orb.p3, tol};
    const Vec2 x100 = center(tri, 100, tol);
    std::vector<PencilEntry> out;
    for (int idx : indices) {
        PencilEntry e;
        e.center_index = idx;
        const ImplicitConic conic = circumconic_with_center(tri, center(tri, idx, tol), tol);
        e.through_x100 = membership_residual(conic, x100);
        e.axis_exempt = (idx == 3);
        const ConicAxes ax = axes(conic, tol);
        e.aspect_ratio = ax.aspect_ratio();
        e.axis_parallel = e.axis_exempt ? 0.0 : detail::axis_parallel_angle(ax.major_direction);
        out.push_back(e);
    }
    return out;
}

struct SuperpositionReport {
    double act_intouch_on_eb = 0.0;        // worst membership residual
    double orbit_intouch_on_medial = 0.0;  // worst membership residual
    double collinear = 0.0;
    double ratio_dev = 0.0;  // against 3:1:2:6
};

inline SuperpositionReport superposition_checks(const BilliardShape& shape, double t,
                                                const Tolerances& tol = tolerances()) {
    const Orbit orb = orbit_at(shape, t, tol);
    const Triangle tri{orb.p1, orb.p2, orb.p3, tol};
    const ImplicitConic eb{{-1.0, 0.0, 0.0, 0.0, 1.0 / (shape.a * shape.a),
                            1.0 / (shape.b * shape.b)}};
    SuperpositionReport rep;

    const Triangle act = anticomplementary(tri);
    const Triangle act_touch = cevian_triangle(act, center(act, 7, tol), tol);
    for (const Vec2& p : act_touch.v)
        rep.act_intouch_on_eb = std::max(rep.act_intouch_on_eb, membership_residual(eb, p));

    const Triangle med = medial(tri);
    const ImplicitConic medcb = circumconic_with_center(med, center(med, 9, tol), tol);
    const Triangle touch = cevian_triangle(tri, center(tri, 7, tol), tol);
    for (const Vec2& p : touch.v)
        rep.orbit_intouch_on_medial = std::max(rep.orbit_intouch_on_medial,
                                               membership_residual(medcb, p));

    const std::array<Vec2, 5> pts = {center(tri, 7, tol), center(tri, 142, tol),
                                     center(tri, 2, tol), center(tri, 9, tol),
                                     center(tri, 144, tol)};
    const Vec2 dir = normalized(pts[4] - pts[0]);
    for (const Vec2& p : pts)
        rep.collinear = std::max(rep.collinear, std::fabs(cross(dir, p - pts[0])) / shape.b);
    const std::array<double, 4> want = {3.0, 1.0, 2.0, 6.0};
    const double unit = dist(pts[0], pts[1]) / want[0];
    for (int k = 1; k < 4; ++k)
        rep.ratio_dev = std::max(rep.ratio_dev,
                                 detail::rel_dev(dist(pts[k], pts[k + 1]) / unit, want[k]));
    return rep;
}

// Focal-length extrema of the Feuerbach hyperbola: bracketed maxima of
// lambda(t) per quarter period, refined by golden section.
inline std::vector<double> focal_length_maxima(const BilliardShape& shape,
                                               const Tolerances& tol = tolerances()) {
    const auto lam = [&](double t) {
        const Orbit o = orbit_at(shape, t, tol);
        const Triangle tri{o.p1, o.p2, o.p3, tol};
        if (tri.is_isosceles(tol.isosceles_rel)) return 0.0;
        return hyperbola_through(o.p1, o.p2, o.p3, true, tol).focal_length();
    };
    const int grid = 720;
    const double quarter = 0.5 * std::numbers::pi;
    std::vector<double> vals(grid + 1);
    for (int i = 0; i <= grid; ++i) vals[i] = lam(quarter * i / grid);
    std::vector<double> maxima;
    for (int i = 1; i < grid; ++i)
        if (vals[i] > vals[i - 1] && vals[i] > vals[i + 1])
            maxima.push_back(golden_section_max(lam, quarter * (i - 1) / grid,
                                                quarter * (i + 1) / grid, tol.golden_section_t));
    return maxima;
}

}  // namespace ebc
