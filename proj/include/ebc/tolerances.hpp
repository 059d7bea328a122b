#pragma once

namespace ebc {

// Central tolerance record. Every numeric gate in the library reads from one
// of these; the defaults are the contract the test suite pins.
struct Tolerances {
    // linear algebra
    double pivot_rel = 1e-12;          // singular pivot vs max row norm
    double solve_residual_rel = 1e-9;  // ||Ax-b|| vs ||b||
    double eigen_residual = 1e-10;     // reconstruction of 2x2 eigen systems
    double lsq_condition_max = 1e12;   // normal-matrix condition bound

    // polynomial roots
    double root_residual_rel = 1e-8;   // |p(r)| vs max|coeff| * local scale
    double root_merge = 1e-9;          // relative merge distance for multiple roots

    // billiard / triangle
    double circle_degenerate_rel = 1e-12;  // a-b vs a
    double on_boundary = 1e-10;            // vertex on the billiard
    double caustic_tangency = 1e-9;        // side tangency discriminant
    double perimeter_rel = 1e-9;           // |perimeter - L| vs L
    double reflection_rad = 1e-8;          // bisection of the vertex angle
    double right_angle = 1e-8;             // right-orbit angle check
    double isosceles_rel = 1e-7;           // two sides equal vs perimeter
    double area_degenerate_rel = 1e-12;    // area vs squared max side
    double at_infinity_rel = 1e-12;        // trilinear denominator vs scale

    // conics
    double conic_incidence = 1e-10;    // vertex on solved conic
    double conic_gradient = 1e-10;     // gradient at prescribed center
    double degenerate_hessian = 1e-12; // |4 c4 c5 - c3^2| vs coefficient scale
    double membership = 1e-9;          // on_conic residual
    double line_tangency = 1e-9;       // line-conic discriminant
    double boundary_band = 1e-9;       // classify_by_medial boundary band
    double axis_parallel_rad = 1e-9;   // axis direction vs billiard axes

    // sweep claims
    double claim_ratio_rel = 1e-8;     // ratio invariants
    double claim_membership = 1e-9;    // membership claims at b=1 scale
    double asymptote_rel = 1e-10;      // |c4|,|c5| vs coefficient norm
    double locus_residual = 1e-7;      // elliptic-locus fit threshold (b=1 scale)
    double collinear = 1e-9;
    double interval_ratio_rel = 1e-8;  // 3:1:2:6 check

    // poristic
    double poristic_guard = 1e-6;      // tangent construction guard band
    double poristic_metric = 1e-9;     // member r,R reproduction
    double poristic_circle = 1e-8;     // fitted circle radius/center
    double antiorthic = 1e-8;          // axis stationarity

    // searches
    double golden_section_t = 1e-10;   // focal-extrema location in t
};

inline const Tolerances& tolerances() {
    static const Tolerances defaults{};
    return defaults;
}

}  // namespace ebc
