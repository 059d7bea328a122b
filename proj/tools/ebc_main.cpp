// Command-line front end: orbit construction, invariant sweeps, locus fits,
// conic solves, the poristic family and the Pythagorean reports, emitted as
// CSV or JSON.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebc/ebc.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ToleranceBinding {
    const char* name;
    double ebc::Tolerances::* member;
};

const std::vector<ToleranceBinding>& tolerance_bindings() {
    static const std::vector<ToleranceBinding> table = {
        {"pivot_rel", &ebc::Tolerances::pivot_rel},
        {"solve_residual_rel", &ebc::Tolerances::solve_residual_rel},
        {"eigen_residual", &ebc::Tolerances::eigen_residual},
        {"lsq_condition_max", &ebc::Tolerances::lsq_condition_max},
        {"root_residual_rel", &ebc::Tolerances::root_residual_rel},
        {"root_merge", &ebc::Tolerances::root_merge},
        {"circle_degenerate_rel", &ebc::Tolerances::circle_degenerate_rel},
        {"on_boundary", &ebc::Tolerances::on_boundary},
        {"caustic_tangency", &ebc::Tolerances::caustic_tangency},
        {"perimeter_rel", &ebc::Tolerances::perimeter_rel},
        {"reflection_rad", &ebc::Tolerances::reflection_rad},
        {"right_angle", &ebc::Tolerances::right_angle},
        {"isosceles_rel", &ebc::Tolerances::isosceles_rel},
        {"area_degenerate_rel", &ebc::Tolerances::area_degenerate_rel},
        {"at_infinity_rel", &ebc::Tolerances::at_infinity_rel},
        {"conic_incidence", &ebc::Tolerances::conic_incidence},
        {"conic_gradient", &ebc::Tolerances::conic_gradient},
        {"degenerate_hessian", &ebc::Tolerances::degenerate_hessian},
        {"membership", &ebc::Tolerances::membership},
        {"line_tangency", &ebc::Tolerances::line_tangency},
        {"boundary_band", &ebc::Tolerances::boundary_band},
        {"axis_parallel_rad", &ebc::Tolerances::axis_parallel_rad},
        {"claim_ratio_rel", &ebc::Tolerances::claim_ratio_rel},
        {"claim_membership", &ebc::Tolerances::claim_membership},
        {"asymptote_rel", &ebc::Tolerances::asymptote_rel},
        {"locus_residual", &ebc::Tolerances::locus_residual},
        {"collinear", &ebc::Tolerances::collinear},
        {"interval_ratio_rel", &ebc::Tolerances::interval_ratio_rel},
        {"poristic_guard", &ebc::Tolerances::poristic_guard},
        {"poristic_metric", &ebc::Tolerances::poristic_metric},
        {"poristic_circle", &ebc::Tolerances::poristic_circle},
        {"antiorthic", &ebc::Tolerances::antiorthic},
        {"golden_section_t", &ebc::Tolerances::golden_section_t},
    };
    return table;
}

ebc::Tolerances load_tolerances(const std::vector<std::string>& overrides) {
    ebc::Tolerances tol;
    if (const char* path = std::getenv("BILLIARD_TOL_FILE")) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("cannot open BILLIARD_TOL_FILE: ") + path);
        json j;
        in >> j;
        for (auto& [key, val] : j.items()) {
            bool found = false;
            for (const auto& b : tolerance_bindings())
                if (key == b.name) {
                    tol.*(b.member) = val.get<double>();
                    found = true;
                }
            if (!found) throw std::runtime_error("unknown tolerance key: " + key);
        }
    }
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::runtime_error("--tol expects name=value: " + kv);
        const std::string key = kv.substr(0, eq);
        const double val = std::stod(kv.substr(eq + 1));
        bool found = false;
        for (const auto& b : tolerance_bindings())
            if (key == b.name) {
                tol.*(b.member) = val;
                found = true;
            }
        if (!found) throw std::runtime_error("unknown tolerance key: " + key);
    }
    return tol;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

json vec_json(const ebc::Vec2& p) { return json::array({p.x, p.y}); }

// ---------------------------------------------------------------------------

int run_orbit(const ebc::BilliardShape& shape, double t, const std::string& format,
              Output& out, const ebc::Tolerances& tol) {
    const ebc::Orbit orb = ebc::orbit_at(shape, t, tol);
    const ebc::Triangle tri{orb.p1, orb.p2, orb.p3, tol};
    const ebc::MetricData met = ebc::metric(tri);
    const double d = ebc::dist(ebc::center(tri, 1, tol), ebc::center(tri, 3, tol));

    if (format == "json") {
        json j;
        j["a"] = shape.a;
        j["b"] = shape.b;
        j["t"] = orb.t;
        j["vertices"] = json::array({vec_json(orb.p1), vec_json(orb.p2), vec_json(orb.p3)});
        j["sidelengths"] = json::array({orb.s1, orb.s2, orb.s3});
        j["perimeter"] = orb.perimeter();
        j["r"] = met.r;
        j["R"] = met.R;
        j["d"] = d;
        json centers = json::object();
        for (int idx : ebc::registered_centers()) {
            try {
                const ebc::Vec2 p = ebc::center(tri, idx, tol);
                if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ebc::PointAtInfinity("");
                centers["X" + std::to_string(idx)] = vec_json(p);
            } catch (const ebc::PointAtInfinity&) {
                centers["X" + std::to_string(idx)] = nullptr;  // undefined for this member
            }
        }
        j["centers"] = centers;
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "quantity,value1,value2\n";
        os << "t," << fmt17(orb.t) << ",\n";
        os << "P1," << fmt17(orb.p1.x) << "," << fmt17(orb.p1.y) << "\n";
        os << "P2," << fmt17(orb.p2.x) << "," << fmt17(orb.p2.y) << "\n";
        os << "P3," << fmt17(orb.p3.x) << "," << fmt17(orb.p3.y) << "\n";
        os << "s1," << fmt17(orb.s1) << ",\n";
        os << "s2," << fmt17(orb.s2) << ",\n";
        os << "s3," << fmt17(orb.s3) << ",\n";
        os << "perimeter," << fmt17(orb.perimeter()) << ",\n";
        os << "r," << fmt17(met.r) << ",\n";
        os << "R," << fmt17(met.R) << ",\n";
        os << "d," << fmt17(d) << ",\n";
        for (int idx : ebc::registered_centers()) {
            try {
                const ebc::Vec2 p = ebc::center(tri, idx, tol);
                if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ebc::PointAtInfinity("");
                os << "X" << idx << "," << fmt17(p.x) << "," << fmt17(p.y) << "\n";
            } catch (const ebc::PointAtInfinity&) {
                os << "X" << idx << ",undefined,undefined\n";
            }
        }
    }
    return 0;
}

int run_sweep(const ebc::BilliardShape& shape, int steps, const std::vector<std::string>& claims,
              bool emit_samples, const std::string& format, Output& out,
              const ebc::Tolerances& tol) {
    const ebc::SweepReport rep = ebc::sweep(shape, steps, claims, tol);
    if (format == "json") {
        json j;
        j["a"] = rep.a;
        j["b"] = rep.b;
        j["steps"] = rep.n_samples;
        json jc = json::array();
        for (const auto& c : rep.claims) {
            json e;
            e["id"] = c.id;
            e["description"] = c.description;
            e["max_deviation"] = c.max_deviation;
            e["tolerance"] = c.tolerance;
            e["samples"] = c.samples;
            e["excluded"] = c.excluded;
            e["pass"] = c.pass;
            if (c.flagged_exclusions) e["flagged_exclusions"] = true;
            jc.push_back(e);
        }
        j["claims"] = jc;
        json je = json::array();
        for (const auto& ev : rep.evidence) {
            json e;
            e["id"] = ev.id;
            e["mean"] = ev.mean;
            e["stddev"] = ev.stddev;
            e["max_abs"] = ev.max_abs;
            je.push_back(e);
        }
        j["evidence"] = je;
        if (emit_samples) {
            json js = json::array();
            for (const auto& s : rep.samples) {
                json e;
                e["t"] = s.t;
                e["isosceles"] = s.isosceles;
                e["perimeter"] = s.perimeter;
                e["r"] = s.r;
                e["R"] = s.R;
                e["d"] = s.d;
                e["eta1_major"] = s.eta1_major;
                e["eta1_minor"] = s.eta1_minor;
                e["lambda_f"] = s.lambda_f;
                e["lambda_jexc"] = s.lambda_jexc;
                e["mu3_major"] = s.mu3_major;
                e["mu3_minor"] = s.mu3_minor;
                e["mu5_major"] = s.mu5_major;
                e["mu5_minor"] = s.mu5_minor;
                e["x100"] = vec_json(s.x100);
                e["x1156"] = vec_json(s.x1156);
                js.push_back(e);
            }
            j["samples"] = js;
        }
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        if (emit_samples) {
            os << "t,isosceles,perimeter,r,R,d,eta1_major,eta1_minor,lambda_f,lambda_jexc,"
               << "mu3_major,mu3_minor,mu5_major,mu5_minor,x100_x,x100_y,x1156_x,x1156_y\n";
            for (const auto& s : rep.samples) {
                os << fmt17(s.t) << "," << (s.isosceles ? 1 : 0) << "," << fmt17(s.perimeter)
                   << "," << fmt17(s.r) << "," << fmt17(s.R) << "," << fmt17(s.d) << ","
                   << fmt17(s.eta1_major) << "," << fmt17(s.eta1_minor) << ","
                   << fmt17(s.lambda_f) << "," << fmt17(s.lambda_jexc) << ","
                   << fmt17(s.mu3_major) << "," << fmt17(s.mu3_minor) << ","
                   << fmt17(s.mu5_major) << "," << fmt17(s.mu5_minor) << ","
                   << fmt17(s.x100.x) << "," << fmt17(s.x100.y) << "," << fmt17(s.x1156.x)
                   << "," << fmt17(s.x1156.y) << "\n";
            }
        } else {
            os << "claim,description,max_deviation,tolerance,samples,excluded,pass\n";
            for (const auto& c : rep.claims)
                os << c.id << ",\"" << c.description << "\"," << fmt17(c.max_deviation) << ","
                   << fmt17(c.tolerance) << "," << c.samples << "," << c.excluded << ","
                   << (c.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& ev : rep.evidence)
                os << "evidence:" << ev.id << ",\"mean/stddev/max\"," << fmt17(ev.mean) << ","
                   << fmt17(ev.stddev) << ",," << "," << fmt17(ev.max_abs) << "\n";
        }
    }
    if (!rep.all_pass()) {
        for (const auto& c : rep.claims)
            if (!c.pass)
                std::cerr << "claim failed: " << c.id << " max_deviation=" << fmt17(c.max_deviation)
                          << " tolerance=" << fmt17(c.tolerance) << "\n";
        return 1;
    }
    return 0;
}

int run_locus(const ebc::BilliardShape& shape, const std::string& center_arg, int steps,
              const std::string& format, Output& out, const ebc::Tolerances& tol) {
    const int idx = (center_arg == "excenters") ? 0 : std::stoi(center_arg);
    const ebc::LocusFit fit = ebc::locus(shape, idx, steps, tol);
    const char* verdict = fit.verdict == ebc::LocusVerdict::Elliptic        ? "Elliptic"
                          : fit.verdict == ebc::LocusVerdict::NonElliptic ? "NonElliptic"
                                                                           : "Stationary";
    if (format == "json") {
        json j;
        j["a"] = shape.a;
        j["b"] = shape.b;
        j["center"] = (idx == 0) ? json("excenters") : json(idx);
        j["steps"] = steps;
        j["fitted_a"] = fit.fitted_a;
        j["fitted_b"] = fit.fitted_b;
        j["rms_residual"] = fit.rms_residual;
        j["rms_refined"] = fit.rms_refined;
        j["verdict"] = verdict;
        json pts = json::array();
        for (const ebc::Vec2& p : fit.points) pts.push_back(vec_json(p));
        j["points"] = pts;
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "# center=" << center_arg << " fitted_a=" << fmt17(fit.fitted_a)
           << " fitted_b=" << fmt17(fit.fitted_b) << " rms=" << fmt17(fit.rms_residual)
           << " rms_refined=" << fmt17(fit.rms_refined) << " verdict=" << verdict << "\n";
        os << "x,y\n";
        for (const ebc::Vec2& p : fit.points)
            os << fmt17(p.x) << "," << fmt17(p.y) << "\n";
    }
    return 0;
}

ebc::Triangle triangle_from_args(const ebc::BilliardShape* shape, double t,
                                 const std::vector<double>& tri_coords,
                                 const ebc::Tolerances& tol) {
    if (!tri_coords.empty()) {
        if (tri_coords.size() != 6)
            throw std::runtime_error("--triangle expects 6 numbers x1,y1,x2,y2,x3,y3");
        return ebc::Triangle{{tri_coords[0], tri_coords[1]},
                             {tri_coords[2], tri_coords[3]},
                             {tri_coords[4], tri_coords[5]},
                             tol};
    }
    if (!shape) throw std::runtime_error("need either --triangle or --a/--b/--t");
    const ebc::Orbit orb = ebc::orbit_at(*shape, t, tol);
    return ebc::Triangle{orb.p1, orb.p2, orb.p3, tol};
}

json axes_json(const ebc::ConicAxes& ax) {
    json j;
    j["kind"] = (ax.kind == ebc::ConicKind::Ellipse) ? "ellipse" : "hyperbola";
    j["center"] = vec_json(ax.center);
    j["semi_major"] = ax.semi_major;
    j["semi_minor"] = ax.semi_minor;
    j["major_direction"] = vec_json(ax.major_direction);
    if (ax.kind == ebc::ConicKind::Ellipse)
        j["foci"] = json::array({vec_json(ax.foci[0]), vec_json(ax.foci[1])});
    else
        j["focal_length"] = ax.focal_length;
    return j;
}

int run_conic(const ebc::Triangle& tri, int center_idx, const std::string& format, Output& out,
              const ebc::Tolerances& tol) {
    const ebc::Vec2 m = ebc::center(tri, center_idx, tol);
    const ebc::ImplicitConic g = ebc::circumconic_with_center(tri, m, tol);
    const ebc::ConicAxes ax = ebc::axes(g, tol);
    if (format == "json") {
        json j;
        j["center_index"] = center_idx;
        j["center"] = vec_json(m);
        j["coefficients"] = json::array({g.c[0], g.c[1], g.c[2], g.c[3], g.c[4], g.c[5]});
        j["axes"] = axes_json(ax);
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "c0,c1,c2,c3,c4,c5\n";
        os << fmt17(g.c[0]);
        for (int i = 1; i < 6; ++i) os << "," << fmt17(g.c[i]);
        os << "\n";
        os << "kind,center_x,center_y,semi_major,semi_minor,dir_x,dir_y,focal_length\n";
        os << (ax.kind == ebc::ConicKind::Ellipse ? "ellipse" : "hyperbola") << ","
           << fmt17(ax.center.x) << "," << fmt17(ax.center.y) << "," << fmt17(ax.semi_major)
           << "," << fmt17(ax.semi_minor) << "," << fmt17(ax.major_direction.x) << ","
           << fmt17(ax.major_direction.y) << ","
           << fmt17(ax.kind == ebc::ConicKind::Hyperbola ? ax.focal_length : 0.0) << "\n";
    }
    return 0;
}

int run_inconic(const ebc::Triangle& tri, int center_idx, const std::string& format, Output& out,
                const ebc::Tolerances& tol) {
    const ebc::Vec2 m = ebc::center(tri, center_idx, tol);
    const ebc::Inconic inc = ebc::inconic_with_center(tri, m, ebc::barycentric_fn(center_idx), tol);
    if (format == "json") {
        json j;
        j["center_index"] = center_idx;
        j["center"] = vec_json(m);
        j["coefficients"] = json::array({inc.conic.c[0], inc.conic.c[1], inc.conic.c[2],
                                         inc.conic.c[3], inc.conic.c[4], inc.conic.c[5]});
        j["perspector"] = vec_json(inc.perspector);
        j["contacts"] = json::array({vec_json(inc.contacts.v[0]), vec_json(inc.contacts.v[1]),
                                     vec_json(inc.contacts.v[2])});
        j["is_ellipse"] = inc.is_ellipse;
        if (inc.is_ellipse) j["axes"] = axes_json(ebc::axes(inc.conic, tol));
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "c0,c1,c2,c3,c4,c5,perspector_x,perspector_y,is_ellipse\n";
        os << fmt17(inc.conic.c[0]);
        for (int i = 1; i < 6; ++i) os << "," << fmt17(inc.conic.c[i]);
        os << "," << fmt17(inc.perspector.x) << "," << fmt17(inc.perspector.y) << ","
           << (inc.is_ellipse ? 1 : 0) << "\n";
        os << "contact,x,y\n";
        for (int i = 0; i < 3; ++i)
            os << i + 1 << "," << fmt17(inc.contacts.v[i].x) << ","
               << fmt17(inc.contacts.v[i].y) << "\n";
    }
    return 0;
}

int run_poristic(double R, double r, int steps, const std::string& format, Output& out,
                 const ebc::Tolerances& tol) {
    const ebc::PoristicFamily fam{R, r};
    std::vector<double> thetas, ratios;
    for (int i = 0; i < steps; ++i) {
        const double th = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / steps;
        thetas.push_back(th);
        ratios.push_back(ebc::circumbilliard_ratio(fam, th, tol));
    }
    double mean = 0.0;
    for (double v : ratios) mean += v;
    mean /= static_cast<double>(ratios.size());
    double ss = 0.0;
    for (double v : ratios) ss += (v - mean) * (v - mean);
    const double stddev = std::sqrt(ss / static_cast<double>(ratios.size()));
    const ebc::PoristicLociReport loci = ebc::center_loci(fam, steps, tol);

    if (format == "json") {
        json j;
        j["R"] = R;
        j["r"] = r;
        j["d"] = fam.d;
        j["steps"] = steps;
        j["aspect_ratio_mean"] = mean;
        j["aspect_ratio_stddev"] = stddev;
        j["aspect_ratio_closed_form"] = fam.aspect_ratio_closed_form();
        j["excenter_circle"] = {{"center", vec_json(loci.excenter_circle.center)},
                                {"radius", loci.excenter_circle.radius},
                                {"rms", loci.excenter_circle.rms},
                                {"x40", vec_json(loci.x40)}};
        j["x9_circle"] = {{"center", vec_json(loci.x9_circle.center)},
                          {"radius", loci.x9_circle.radius},
                          {"rms", loci.x9_circle.rms},
                          {"center_candidate", vec_json(loci.x9_center_candidate)},
                          {"radius_candidate", loci.x9_radius_candidate},
                          {"radius_ratio_to_candidate",
                           loci.x9_circle.radius / loci.x9_radius_candidate}};
        j["antiorthic_drift"] = loci.antiorthic_drift;
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "# R=" << fmt17(R) << " r=" << fmt17(r)
           << " ratio_mean=" << fmt17(mean) << " ratio_stddev=" << fmt17(stddev)
           << " closed_form=" << fmt17(fam.aspect_ratio_closed_form()) << "\n";
        os << "# excenter_circle_radius=" << fmt17(loci.excenter_circle.radius)
           << " x9_circle_radius=" << fmt17(loci.x9_circle.radius)
           << " x9_radius_candidate=" << fmt17(loci.x9_radius_candidate)
           << " antiorthic_drift=" << fmt17(loci.antiorthic_drift) << "\n";
        os << "theta,ax,ay,bx,by,cx,cy,a9_over_b9\n";
        for (int i = 0; i < steps; ++i) {
            const ebc::Triangle t = ebc::poristic_member(fam, thetas[i], tol);
            os << fmt17(thetas[i]);
            for (const ebc::Vec2& p : t.v) os << "," << fmt17(p.x) << "," << fmt17(p.y);
            os << "," << fmt17(ratios[i]) << "\n";
        }
    }
    return 0;
}

std::string aspect_exact_string(std::int64_t s1, std::int64_t s2, std::int64_t s3) {
    std::ostringstream os;
    os << "(" << s1 + s2 << "+sqrt(" << s3 * (3 * s3 - 2 * s1 - 2 * s2) << "))/sqrt("
       << (s1 + s2 + 3 * s3) * (s1 + s2 - s3) << ")";
    return os.str();
}

int run_pyth(std::int64_t max_m, bool table, bool groups, const std::string& format, Output& out,
             const ebc::Tolerances& tol) {
    const auto triples = ebc::generate(max_m);
    if (table) {
        // first 16 primitive triples ordered by hypotenuse, with isoscelesness rank
        std::vector<ebc::PythTriple> prim;
        for (const auto& t : triples)
            if (t.primitive) prim.push_back(t);
        std::sort(prim.begin(), prim.end(), [](const auto& a, const auto& b) {
            if (a.s3 != b.s3) return a.s3 < b.s3;
            return std::min(a.s1, a.s2) < std::min(b.s1, b.s2);
        });
        prim.resize(std::min<std::size_t>(prim.size(), 16));
        for (auto& t : prim)
            if (t.s1 > t.s2) std::swap(t.s1, t.s2);  // smaller leg first, as tabulated
        std::vector<int> order(prim.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        auto scalene = [](const ebc::PythTriple& t) {
            return static_cast<double>(std::max(t.s1, t.s2)) /
                   static_cast<double>(std::min(t.s1, t.s2));
        };
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return scalene(prim[a]) < scalene(prim[b]); });
        std::vector<int> rank(prim.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i) + 1;

        if (format == "json") {
            json rows = json::array();
            for (std::size_t i = 0; i < prim.size(); ++i) {
                const auto& t = prim[i];
                json e;
                e["s1"] = t.s1;
                e["s2"] = t.s2;
                e["s3"] = t.s3;
                e["aspect_exact"] = aspect_exact_string(t.s1, t.s2, t.s3);
                e["aspect"] = ebc::aspect_ratio(static_cast<double>(t.s1),
                                                static_cast<double>(t.s2),
                                                static_cast<double>(t.s3));
                e["rank"] = rank[i];
                rows.push_back(e);
            }
            out.stream() << rows.dump(2) << "\n";
        } else {
            auto& os = out.stream();
            os << "s1,s2,s3,aspect_exact,aspect,rank\n";
            for (std::size_t i = 0; i < prim.size(); ++i) {
                const auto& t = prim[i];
                os << t.s1 << "," << t.s2 << "," << t.s3 << ","
                   << aspect_exact_string(t.s1, t.s2, t.s3) << ","
                   << fmt17(ebc::aspect_ratio(static_cast<double>(t.s1),
                                              static_cast<double>(t.s2),
                                              static_cast<double>(t.s3)))
                   << "," << rank[i] << "\n";
            }
        }
        return 0;
    }
    if (groups) {
        const auto g = ebc::perimeter_groups(triples);
        if (format == "json") {
            json j;
            j["triples"] = triples.size();
            j["unique_perimeters"] = g.unique_perimeters();
            json h = json::object();
            for (const auto& [k, v] : g.histogram) h[std::to_string(k)] = v;
            j["histogram"] = h;
            json quads = json::array();
            for (const auto& [p, v] : g.groups_of(4)) {
                json e;
                e["perimeter"] = p;
                json members = json::array();
                for (const auto& t : v)
                    members.push_back(json::array({t.s1, t.s2, t.s3}));
                e["members"] = members;
                quads.push_back(e);
            }
            j["quadruple_groups"] = quads;
            out.stream() << j.dump(2) << "\n";
        } else {
            auto& os = out.stream();
            os << "# triples=" << triples.size() << " unique_perimeters=" << g.unique_perimeters();
            for (const auto& [k, v] : g.histogram) os << " groups_of_" << k << "=" << v;
            os << "\n";
            os << "perimeter,s1,s2,s3\n";
            for (const auto& [p, v] : g.groups_of(4))
                for (const auto& t : v)
                    os << p << "," << t.s1 << "," << t.s2 << "," << t.s3 << "\n";
        }
        return 0;
    }
    // full listing with circumbilliard axes
    if (format == "json") {
        json rows = json::array();
        for (const auto& t : triples) {
            const ebc::AbPoint ab = ebc::circumbilliard_axes(static_cast<double>(t.s1),
                                                             static_cast<double>(t.s2), tol);
            json e;
            e["m"] = t.m;
            e["n"] = t.n;
            e["s1"] = t.s1;
            e["s2"] = t.s2;
            e["s3"] = t.s3;
            e["primitive"] = t.primitive;
            e["a"] = ab.a;
            e["b"] = ab.b;
            e["b_normalized"] = 1.0;
            e["a_normalized"] = ab.a / ab.b;
            rows.push_back(e);
        }
        out.stream() << rows.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "m,n,s1,s2,s3,primitive,a,b,a_over_b\n";
        for (const auto& t : triples) {
            const ebc::AbPoint ab = ebc::circumbilliard_axes(static_cast<double>(t.s1),
                                                             static_cast<double>(t.s2), tol);
            os << t.m << "," << t.n << "," << t.s1 << "," << t.s2 << "," << t.s3 << ","
               << (t.primitive ? 1 : 0) << "," << fmt17(ab.a) << "," << fmt17(ab.b) << ","
               << fmt17(ab.a / ab.b) << "\n";
        }
    }
    return 0;
}

int run_isoperim(double L, double a_min, double a_max, int steps, const std::string& format,
                 Output& out, const ebc::Tolerances& tol) {
    const auto pts = ebc::iso_perimeter_curve(L, a_min, a_max, steps, tol);
    if (format == "json") {
        json j;
        j["L"] = L;
        json rows = json::array();
        for (const auto& p : pts) rows.push_back(json::array({p.a, p.b}));
        j["points"] = rows;
        out.stream() << j.dump(2) << "\n";
    } else {
        auto& os = out.stream();
        os << "a,b,quartic_residual,perimeter\n";
        for (const auto& p : pts) {
            const ebc::FamilyConstants fc = ebc::family_constants({p.a, p.b}, tol);
            os << fmt17(p.a) << "," << fmt17(p.b) << ","
               << fmt17(ebc::iso_perimeter_quartic(L, p.a, p.b)) << "," << fmt17(fc.perimeter)
               << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic-billiard 3-periodic conics: sweeps, loci and reports"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    std::vector<std::string> tol_overrides;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--tol", tol_overrides, "tolerance override name=value (repeatable)");

    double a = 1.5, b = 1.0, t = 0.0;
    bool deg = false;
    int steps = 360;

    auto* orbit_cmd = app.add_subcommand("orbit", "3-periodic orbit and its centers at t");
    orbit_cmd->add_option("--a", a, "major semi-axis");
    orbit_cmd->add_option("--b", b, "minor semi-axis");
    orbit_cmd->add_option("--t", t, "boundary parameter of P1");
    orbit_cmd->add_flag("--deg", deg, "t given in degrees");

    std::vector<std::string> claims;
    bool emit_samples = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "invariant claims over the orbit family");
    sweep_cmd->add_option("--a", a, "major semi-axis");
    sweep_cmd->add_option("--b", b, "minor semi-axis");
    sweep_cmd->add_option("--steps", steps, "sample count");
    sweep_cmd->add_option("--claims", claims, "claim ids or 'all'")->delimiter(',');
    sweep_cmd->add_flag("--emit-samples", emit_samples, "emit per-sample rows instead of verdicts");

    std::string center_arg = "1";
    auto* locus_cmd = app.add_subcommand("locus", "locus of a center over the family");
    locus_cmd->add_option("--a", a, "major semi-axis");
    locus_cmd->add_option("--b", b, "minor semi-axis");
    locus_cmd->add_option("--center", center_arg, "Kimberling index or 'excenters'");
    locus_cmd->add_option("--steps", steps, "sample count");

    int center_idx = 9;
    std::vector<double> tri_coords;
    auto* conic_cmd = app.add_subcommand("conic", "circumconic with prescribed center");
    conic_cmd->add_option("--a", a, "major semi-axis");
    conic_cmd->add_option("--b", b, "minor semi-axis");
    conic_cmd->add_option("--t", t, "boundary parameter of P1");
    conic_cmd->add_flag("--deg", deg, "t given in degrees");
    conic_cmd->add_option("--center", center_idx, "Kimberling index of the center");
    conic_cmd->add_option("--triangle", tri_coords, "explicit vertices x1,y1,...,y3")
        ->delimiter(',');

    auto* inconic_cmd = app.add_subcommand("inconic", "inconic with prescribed center");
    inconic_cmd->add_option("--a", a, "major semi-axis");
    inconic_cmd->add_option("--b", b, "minor semi-axis");
    inconic_cmd->add_option("--t", t, "boundary parameter of P1");
    inconic_cmd->add_flag("--deg", deg, "t given in degrees");
    inconic_cmd->add_option("--center", center_idx, "Kimberling index of the center");
    inconic_cmd->add_option("--triangle", tri_coords, "explicit vertices x1,y1,...,y3")
        ->delimiter(',');

    double R = 1.0, rr = 0.3625;
    auto* poristic_cmd = app.add_subcommand("poristic", "poristic family reports");
    poristic_cmd->add_option("--R", R, "circumradius");
    poristic_cmd->add_option("--r", rr, "inradius");
    poristic_cmd->add_option("--steps", steps, "member count");

    std::int64_t max_m = 200;
    bool pyth_table = false, pyth_groups = false;
    auto* pyth_cmd = app.add_subcommand("pyth", "Pythagorean triples and their billiards");
    pyth_cmd->add_option("--max-m", max_m, "largest Euclid parameter m");
    pyth_cmd->add_flag("--table", pyth_table, "first 16 primitive triples by hypotenuse");
    pyth_cmd->add_flag("--groups", pyth_groups, "perimeter grouping report");

    double L = 60060.0, a_min = 1.4, a_max = 3.0;
    auto* iso_cmd = app.add_subcommand("isoperim", "iso-perimeter level curve in (a,b)");
    iso_cmd->add_option("--L", L, "orbit perimeter");
    iso_cmd->add_option("--a-min", a_min, "range start");
    iso_cmd->add_option("--a-max", a_max, "range end");
    iso_cmd->add_option("--steps", steps, "sample count");

    for (auto* sub : {orbit_cmd, sweep_cmd, locus_cmd, conic_cmd, inconic_cmd, poristic_cmd,
                      pyth_cmd, iso_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const ebc::Tolerances tol = load_tolerances(tol_overrides);
        Output out;
        out.open(out_path);
        if (deg) t *= std::numbers::pi / 180.0;

        if (orbit_cmd->parsed()) return run_orbit({a, b}, t, format, out, tol);
        if (sweep_cmd->parsed()) {
            if (claims.empty()) claims = {"all"};
            return run_sweep({a, b}, steps, claims, emit_samples, format, out, tol);
        }
        if (locus_cmd->parsed()) return run_locus({a, b}, center_arg, steps, format, out, tol);
        if (conic_cmd->parsed()) {
            const ebc::BilliardShape shape{a, b};
            return run_conic(triangle_from_args(&shape, t, tri_coords, tol), center_idx, format,
                             out, tol);
        }
        if (inconic_cmd->parsed()) {
            const ebc::BilliardShape shape{a, b};
            return run_inconic(triangle_from_args(&shape, t, tri_coords, tol), center_idx, format,
                               out, tol);
        }
        if (poristic_cmd->parsed()) return run_poristic(R, rr, steps, format, out, tol);
        if (pyth_cmd->parsed()) return run_pyth(max_m, pyth_table, pyth_groups, format, out, tol);
        if (iso_cmd->parsed()) return run_isoperim(L, a_min, a_max, steps, format, out, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
