#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ebc/errors.hpp"
#include "ebc/triangle.hpp"

namespace ebc {

// First trilinear coordinate as a function of (s1, s2, s3); the other two
// follow by cyclic permutation. The same table is documented in
// docs/triangle_centers.csv with per-entry provenance.
struct TrilinearFn {
    int kimberling_index;
    const char* provenance;  // "paper", "etc" or "structural"
    const char* formula;     // human-readable first coordinate
    double (*f)(double, double, double);
};

namespace detail {

inline double cos_a(double u, double v, double w) { return (v * v + w * w - u * u) / (2.0 * v * w); }

inline double x5_first(double u, double v, double w) {
    // cos(B - C)
    const double cb = cos_a(v, w, u), cc = cos_a(w, u, v);
    const double sb = std::sqrt(std::max(1.0 - cb * cb, 0.0));
    const double sc = std::sqrt(std::max(1.0 - cc * cc, 0.0));
    return cb * cc + sb * sc;
}

inline const std::vector<TrilinearFn>& trilinear_registry() {
    static const std::vector<TrilinearFn> table = {
        {1, "paper", "1", [](double, double, double) { return 1.0; }},
        {2, "etc", "1/s1", [](double u, double, double) { return 1.0 / u; }},
        {3, "etc", "cos(A)", [](double u, double v, double w) { return cos_a(u, v, w); }},
        {4, "etc", "cos(B)*cos(C)",
         [](double u, double v, double w) { return cos_a(v, w, u) * cos_a(w, u, v); }},
        {5, "etc", "cos(B - C)", x5_first},
        {6, "etc", "s1", [](double u, double, double) { return u; }},
        {7, "etc", "1/(s1*(s2 + s3 - s1))",
         [](double u, double v, double w) { return 1.0 / (u * (v + w - u)); }},
        {8, "etc", "(s2 + s3 - s1)/s1",
         [](double u, double v, double w) { return (v + w - u) / u; }},
        {9, "paper", "s2 + s3 - s1", [](double u, double v, double w) { return v + w - u; }},
        {10, "etc", "s2*s3*(s2 + s3)",
         [](double, double v, double w) { return v * w * (v + w); }},
        {11, "etc", "(s2 + s3 - s1)*(s2 - s3)^2/s1",
         [](double u, double v, double w) { return (v + w - u) * (v - w) * (v - w) / u; }},
        {40, "etc", "cos(B) + cos(C) - cos(A) - 1",
         [](double u, double v, double w) {
             return cos_a(v, w, u) + cos_a(w, u, v) - cos_a(u, v, w) - 1.0;
         }},
        {69, "etc", "(s2^2 + s3^2 - s1^2)/s1",
         [](double u, double v, double w) { return (v * v + w * w - u * u) / u; }},
        {190, "etc", "s2*s3/(s2 - s3)",
         [](double, double v, double w) { return v * w / (v - w); }},
        {649, "paper", "s1*(s2 - s3)", [](double u, double v, double w) { return u * (v - w); }},
        {650, "paper", "(s2 - s3)*(s2 + s3 - s1)",
         [](double u, double v, double w) { return (v - w) * (v + w - u); }},
        {664, "etc", "s2*s3/((s2 - s3)*(s2 + s3 - s1))",
         [](double u, double v, double w) { return v * w / ((v - w) * (v + w - u)); }},
        {1156, "paper", "1/((s2 - s3)^2 + s1*(s2 + s3 - 2*s1))",
         [](double u, double v, double w) {
             return 1.0 / ((v - w) * (v - w) + u * (v + w - 2.0 * u));
         }},
    };
    return table;
}

inline const TrilinearFn* find_trilinear(int index) {
    for (const auto& e : trilinear_registry())
        if (e.kimberling_index == index) return &e;
    return nullptr;
}

}  // namespace detail

inline Vec2 center_from_trilinears(const Triangle& tri, const TrilinearFn& fn,
                                   const Tolerances& tol = tolerances()) {
    const double s1 = tri.s[0], s2 = tri.s[1], s3 = tri.s[2];
    return trilinear_to_cartesian(tri, fn.f(s1, s2, s3), fn.f(s2, s3, s1), fn.f(s3, s1, s2), tol);
}

// Kimberling center X_i of tri. Indexes 100, 142, 144, 168, 2951 and 3035 are
// built structurally from identities the other entries provide:
//   X100 = anticomplement of X11      X142 = complement of X9
//   X144 = anticomplement of X7       X168 = X9 of the excentral triangle
//   X2951 = X69 of the excentral      X3035 = complement of X11
inline Vec2 center(const Triangle& tri, int index, const Tolerances& tol = tolerances()) {
    switch (index) {
        case 100: return anticomplement_map(tri, center(tri, 11, tol));
        case 142: return complement_map(tri, center(tri, 9, tol));
        case 144: return anticomplement_map(tri, center(tri, 7, tol));
        case 168: return center(excentral(tri), 9, tol);
        case 2951: return center(excentral(tri), 69, tol);
        case 3035: return complement_map(tri, center(tri, 11, tol));
        default: break;
    }
    const TrilinearFn* fn = detail::find_trilinear(index);
    if (!fn) throw UnknownCenter("center: X" + std::to_string(index) + " not registered");
    return center_from_trilinears(tri, *fn, tol);
}

inline std::vector<int> registered_centers() {
    std::vector<int> out;
    for (const auto& e : detail::trilinear_registry()) out.push_back(e.kimberling_index);
    for (int i : {100, 142, 144, 168, 2951, 3035}) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

inline const char* center_provenance(int index) {
    switch (index) {
        case 100:
        case 142:
        case 144:
        case 168:
        case 2951:
        case 3035: return "structural";
        default: break;
    }
    const TrilinearFn* fn = detail::find_trilinear(index);
    if (!fn) throw UnknownCenter("center_provenance: X" + std::to_string(index));
    return fn->provenance;
}

// Barycentric first-coordinate functions for the inconic centers the paper
// works with (barycentric = s1 * trilinear, cyclically).
using BarycentricFn = std::function<double(double, double, double)>;

inline BarycentricFn barycentric_fn(int index) {
    switch (index) {
        case 1: return [](double u, double, double) { return u; };
        case 3: return [](double u, double v, double w) { return u * u * (v * v + w * w - u * u); };
        case 5: return [](double u, double v, double w) { return u * detail::x5_first(u, v, w); };
        case 6: return [](double u, double, double) { return u * u; };
        case 9: return [](double u, double v, double w) { return u * (v + w - u); };
        default: break;
    }
    const TrilinearFn* fn = detail::find_trilinear(index);
    if (!fn) throw UnknownCenter("barycentric_fn: X" + std::to_string(index) + " not registered");
    auto f = fn->f;
    return [f](double u, double v, double w) { return u * f(u, v, w); };
}

}  // namespace ebc
