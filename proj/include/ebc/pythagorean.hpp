#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ebc/billiard.hpp"
#include "ebc/centers.hpp"
#include "ebc/conic.hpp"
#include "ebc/numeric.hpp"
#include "ebc/triangle.hpp"

namespace ebc {

// Right triangle from the Euclid map of a coprime pair m > n: legs m^2-n^2 and
// 2mn, hypotenuse m^2+n^2. Both-odd pairs give twice a primitive triple; the
// published counts and iso-perimeter tables include those, so generation keeps
// them and flags primitivity instead of filtering.
struct PythTriple {
    std::int64_t m = 0, n = 0;
    std::int64_t s1 = 0, s2 = 0, s3 = 0;  // legs, hypotenuse
    bool primitive = false;               // m, n of opposite parity

    std::int64_t perimeter() const { return s1 + s2 + s3; }
};

inline std::vector<PythTriple> generate(std::int64_t max_m) {
    std::vector<PythTriple> out;
    for (std::int64_t m = 2; m <= max_m; ++m) {
        for (std::int64_t n = 1; n < m; ++n) {
            if (std::gcd(m, n) != 1) continue;
            PythTriple t;
            t.m = m;
            t.n = n;
            t.s1 = m * m - n * n;
            t.s2 = 2 * m * n;
            t.s3 = m * m + n * n;
            t.primitive = ((m - n) % 2) == 1;
            out.push_back(t);
        }
    }
    return out;
}

// aspect ratio a/b of the circumbilliard of a right triangle with legs s1, s2
// and hypotenuse s3; symmetric in the legs
inline double aspect_ratio(double s1, double s2, double s3) {
    const double lhs = s3 * s3, rhs = s1 * s1 + s2 * s2;
    if (std::fabs(lhs - rhs) > 1e-12 * std::max(lhs, rhs))
        throw NotRight("aspect_ratio: sides do not satisfy the Pythagorean relation");
    return (s1 + s2 + std::sqrt(s3 * (3.0 * s3 - 2.0 * s1 - 2.0 * s2))) /
           std::sqrt((s1 + s2 + 3.0 * s3) * (s1 + s2 - s3));
}

struct PerimeterGroups {
    std::map<std::int64_t, std::vector<PythTriple>> by_perimeter;
    std::map<std::size_t, std::int64_t> histogram;  // group size -> count

    std::int64_t unique_perimeters() const {
        return static_cast<std::int64_t>(by_perimeter.size());
    }
    std::vector<std::pair<std::int64_t, std::vector<PythTriple>>> groups_of(std::size_t k) const {
        std::vector<std::pair<std::int64_t, std::vector<PythTriple>>> out;
        for (const auto& [p, v] : by_perimeter)
            if (v.size() == k) out.emplace_back(p, v);
        return out;
    }
};

inline PerimeterGroups perimeter_groups(const std::vector<PythTriple>& triples) {
    PerimeterGroups g;
    for (const auto& t : triples) g.by_perimeter[t.perimeter()].push_back(t);
    for (auto& [p, v] : g.by_perimeter) {
        std::sort(v.begin(), v.end(),
                  [](const PythTriple& a, const PythTriple& b) { return a.s1 < b.s1; });
        ++g.histogram[v.size()];
    }
    return g;
}

// Circumbilliard semi-axes of the elementary right triangle
// (0,0), (s1,0), (s1,s2); its orbit family reproduces the triangle, so
// family_constants(a,b).perimeter equals s1+s2+s3.
struct AbPoint {
    double a = 0.0, b = 0.0;
};

inline AbPoint circumbilliard_axes(double s1, double s2, const Tolerances& tol = tolerances()) {
    const Triangle t{{0.0, 0.0}, {s1, 0.0}, {s1, s2}, tol};
    const ImplicitConic cb = circumconic_with_center(t, center(t, 9, tol), tol);
    const ConicAxes ax = axes(cb, tol);
    return {ax.semi_major, ax.semi_minor};
}

inline std::vector<AbPoint> ab_map(const std::vector<PythTriple>& triples,
                                   const Tolerances& tol = tolerances()) {
    std::vector<AbPoint> out;
    out.reserve(triples.size());
    for (const auto& t : triples)
        out.push_back(circumbilliard_axes(static_cast<double>(t.s1),
                                          static_cast<double>(t.s2), tol));
    return out;
}

// Quartic level curve of equal orbit perimeter in (a, b):
//   (a^2-b^2)^2 L^4 - 8 (2a^2-b^2)(a^2-2b^2)(a^2+b^2) L^2 - 432 a^4 b^4 = 0.
inline double iso_perimeter_quartic(double L, double a, double b) {
    const double a2 = a * a, b2 = b * b;
    return (a2 - b2) * (a2 - b2) * L * L * L * L -
           8.0 * (2.0 * a2 - b2) * (a2 - 2.0 * b2) * (a2 + b2) * L * L -
           432.0 * a2 * a2 * b2 * b2;
}

// scale-free residual: the quartic is degree-8 homogeneous in (L, a, b), so
// evaluate at the b = 1 canonical shape and weigh by L^4 there
inline double iso_perimeter_residual(double L, double a, double b) {
    const double Ln = L / b, an = a / b;
    return iso_perimeter_quartic(Ln, an, 1.0) / (Ln * Ln * Ln * Ln);
}

// Points (a, b) of the level curve for the given perimeter, sampled over
// a_range. For fixed a the quartic is cubic in b^2; candidate roots are kept
// only when the closed-form perimeter confirms them.
inline std::vector<AbPoint> iso_perimeter_curve(double L, double a_min, double a_max, int steps,
                                                const Tolerances& tol = tolerances()) {
    std::vector<AbPoint> out;
    const double L2 = L * L, L4 = L2 * L2;
    for (int i = 0; i <= steps; ++i) {
        const double a = a_min + (a_max - a_min) * static_cast<double>(i) / steps;
        const double a2 = a * a;
        // coefficients in x = b^2 (expansion of iso_perimeter_quartic)
        const double c0 = a2 * a2 * L4 - 16.0 * a2 * a2 * a2 * L2;
        const double c1 = -2.0 * a2 * L4 + 24.0 * a2 * a2 * L2;
        const double c2 = L4 + 24.0 * a2 * L2 - 432.0 * a2 * a2;
        const double c3 = -16.0 * L2;
        for (double x : real_roots({c0, c1, c2, c3}, tol)) {
            if (!(x > 0.0) || !(x < a2)) continue;
            const double b = std::sqrt(x);
            try {
                const FamilyConstants fc = family_constants(BilliardShape{a, b}, tol);
                if (std::fabs(fc.perimeter - L) < 1e-8 * L &&
                    std::fabs(iso_perimeter_residual(L, a, b)) < 1e-8)
                    out.push_back({a, b});
            } catch (const DegenerateCircle&) {
            } catch (const NumericalFailure&) {
            }
        }
    }
    return out;
}

}  // namespace ebc
