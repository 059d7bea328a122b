#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "ebc/errors.hpp"
#include "ebc/tolerances.hpp"
#include "ebc/vec2.hpp"

namespace ebc {

// ---------------------------------------------------------------------------
// small dense linear solves (n <= 6 is all this library ever needs)
// ---------------------------------------------------------------------------

struct LinSystem {
    std::vector<std::vector<double>> matrix;  // n x n
    std::vector<double> rhs;                  // n
};

// Gaussian elimination with partial pivoting. Throws SingularMatrix when the
// best pivot falls under pivot_rel times the largest row norm.
inline std::vector<double> solve_linear(LinSystem sys, const Tolerances& tol = tolerances()) {
    const std::size_t n = sys.matrix.size();
    double max_row_norm = 0.0;
    for (const auto& row : sys.matrix) {
        double s = 0.0;
        for (double v : row) s += std::fabs(v);
        max_row_norm = std::max(max_row_norm, s);
    }
    if (max_row_norm == 0.0) throw SingularMatrix("solve_linear: zero matrix");

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::fabs(sys.matrix[i][col]) > std::fabs(sys.matrix[best][col])) best = i;
        if (std::fabs(sys.matrix[best][col]) < tol.pivot_rel * max_row_norm)
            throw SingularMatrix("solve_linear: pivot below threshold");
        std::swap(sys.matrix[col], sys.matrix[best]);
        std::swap(sys.rhs[col], sys.rhs[best]);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = sys.matrix[i][col] / sys.matrix[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) sys.matrix[i][j] -= f * sys.matrix[col][j];
            sys.rhs[i] -= f * sys.rhs[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = sys.rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= sys.matrix[i][j] * x[j];
        x[i] = s / sys.matrix[i][i];
    }
    return x;
}

// Null vector of a square homogeneous system of rank n-1. Throws
// NullSpaceDimension when the rank is below n-1 (two or more free columns).
inline std::vector<double> null_space_vector(std::vector<std::vector<double>> rows,
                                             const Tolerances& tol = tolerances()) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    double scale = 0.0;
    for (const auto& row : rows)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) throw NullSpaceDimension("null_space_vector: zero matrix");

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if (std::fabs(rows[i][col]) > std::fabs(rows[best][col])) best = i;
        if (std::fabs(rows[best][col]) < tol.pivot_rel * scale) continue;
        std::swap(rows[r], rows[best]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const double f = rows[i][col] / rows[r][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.emplace_back(r, col);
        ++r;
    }
    if (pivots.size() + 1 != n)
        throw NullSpaceDimension("null_space_vector: nullity != 1");

    std::vector<bool> is_pivot(n, false);
    for (auto& [pr, pc] : pivots) is_pivot[pc] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<double> v(n, 0.0);
    v[free_col] = 1.0;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [pr, pc] = *it;
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != pc) s += rows[pr][j] * v[j];
        v[pc] = -s / rows[pr][pc];
    }
    double nn = 0.0;
    for (double x : v) nn += x * x;
    nn = std::sqrt(nn);
    for (double& x : v) x /= nn;
    return v;
}

// ---------------------------------------------------------------------------
// symmetric 2x2 eigen-decomposition
// ---------------------------------------------------------------------------

struct Mat2Sym {
    double a11 = 0.0;
    double a12 = 0.0;
    double a22 = 0.0;
};

struct EigenSym2 {
    double lambda1 = 0.0;  // lambda1 <= lambda2
    double lambda2 = 0.0;
    Vec2 u1;
    Vec2 u2;
};

// Closed-form decomposition, eigenvalues ordered ascending. A repeated
// eigenvalue returns the canonical axes (1,0),(0,1).
inline EigenSym2 eigen_sym2(const Mat2Sym& m) {
    const double tr = m.a11 + m.a22;
    const double df = m.a11 - m.a22;
    const double disc = std::sqrt(df * df + 4.0 * m.a12 * m.a12);
    EigenSym2 out;
    out.lambda1 = 0.5 * (tr - disc);
    out.lambda2 = 0.5 * (tr + disc);

    const double scale = std::max({std::fabs(m.a11), std::fabs(m.a12), std::fabs(m.a22)});
    if (disc <= 1e-15 * std::max(scale, 1e-300) || scale == 0.0) {
        out.u1 = {1.0, 0.0};
        out.u2 = {0.0, 1.0};
        return out;
    }
    // Eigenvector for lambda2 from the better-conditioned row of (M - lambda2 I).
    Vec2 u2;
    if (m.a12 != 0.0) {
        if (std::fabs(m.a11 - out.lambda2) > std::fabs(m.a22 - out.lambda2))
            u2 = normalized({m.a12, out.lambda2 - m.a11});
        else
            u2 = normalized({out.lambda2 - m.a22, m.a12});
    } else {
        u2 = (m.a11 > m.a22) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    out.u2 = u2;
    out.u1 = {-u2.y, u2.x};
    return out;
}

// ---------------------------------------------------------------------------
// real roots of polynomials up to degree 4
// ---------------------------------------------------------------------------

namespace detail {

inline double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

inline double poly_scale_at(const std::vector<double>& c, double x) {
    double v = 0.0, xp = 1.0;
    for (double ci : c) {
        v += std::fabs(ci) * std::fabs(xp);
        xp *= x;
    }
    return v;
}

inline std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
    return d;
}

// bisection refined by Newton inside a strict sign-change bracket
inline double refine_root(const std::vector<double>& c, const std::vector<double>& dc,
                          double lo, double hi) {
    double flo = poly_eval(c, lo);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = poly_eval(c, x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) lo = x; else hi = x;
        const double dfx = poly_eval(dc, x);
        double xn = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::fabs(xn - x) <= 1e-16 * (1.0 + std::fabs(x))) return xn;
        x = xn;
    }
    return x;
}

inline std::vector<double> roots_linear(const std::vector<double>& c) {
    return {-c[0] / c[1]};
}

inline std::vector<double> roots_quadratic(const std::vector<double>& c) {
    const double a = c[2], b = c[1], c0 = c[0];
    const double disc = b * b - 4.0 * a * c0;
    const double scale = std::max({std::fabs(b * b), std::fabs(4.0 * a * c0), 1e-300});
    if (disc < 0.0) {
        if (-disc < 1e-14 * scale) return {-b / (2.0 * a)};  // grazing double root
        return {};
    }
    if (disc < 1e-14 * scale) return {-b / (2.0 * a)};
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    double r1 = q / a;
    double r2 = (q != 0.0) ? c0 / q : -b / a - r1;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

inline std::vector<double> roots_any(std::vector<double> c);  // forward

inline std::vector<double> roots_by_brackets(const std::vector<double>& c) {
    const auto dc = poly_derivative(c);
    std::vector<double> crit = roots_any(dc);
    const double lead = c.back();
    double bound = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        bound = std::max(bound, std::fabs(c[i] / lead));
    bound += 1.0;
    std::vector<double> pts;
    pts.push_back(-bound);
    for (double t : crit)
        if (t > -bound && t < bound) pts.push_back(t);
    pts.push_back(bound);
    std::sort(pts.begin(), pts.end());

    std::vector<double> roots;
    std::vector<double> fv(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) fv[i] = poly_eval(c, pts[i]);

    // critical points sitting on the axis are (multiple) roots
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (std::fabs(fv[i]) <= 64.0 * std::numeric_limits<double>::epsilon() * poly_scale_at(c, pts[i]))
            roots.push_back(pts[i]);

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const bool lo_zero = std::fabs(fv[i]) <= 64.0 * std::numeric_limits<double>::epsilon() * poly_scale_at(c, pts[i]);
        const bool hi_zero = std::fabs(fv[i + 1]) <= 64.0 * std::numeric_limits<double>::epsilon() * poly_scale_at(c, pts[i + 1]);
        if (lo_zero || hi_zero) continue;
        if ((fv[i] > 0.0) != (fv[i + 1] > 0.0))
            roots.push_back(refine_root(c, dc, pts[i], pts[i + 1]));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<double> roots_any(std::vector<double> c) {
    while (c.size() > 1 && std::fabs(c.back()) < std::numeric_limits<double>::min())
        c.pop_back();
    if (c.size() <= 1) return {};

    // Balance the variable (x = s*y) so every term matters near |y| ~ 1;
    // keeps brackets and zero thresholds meaningful when coefficients span
    // many orders of magnitude.
    const std::size_t deg = c.size() - 1;
    double s = 0.0;
    for (std::size_t i = 0; i < deg; ++i)
        if (c[i] != 0.0)
            s = std::max(s, std::pow(std::fabs(c[i] / c[deg]),
                                     1.0 / static_cast<double>(deg - i)));
    if (s <= 0.0) return {0.0};  // only the leading term survives
    std::vector<double> cs(c.size());
    double sp = 1.0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        cs[i] = c[i] * sp;
        sp *= s;
    }
    double amax = 0.0;
    for (double v : cs) amax = std::max(amax, std::fabs(v));
    for (double& v : cs) v /= amax;

    std::vector<double> roots;
    if (cs.size() == 2)
        roots = roots_linear(cs);
    else if (cs.size() == 3)
        roots = roots_quadratic(cs);
    else
        roots = roots_by_brackets(cs);
    for (double& r : roots) r *= s;
    return roots;
}

}  // namespace detail

// Sorted distinct real roots of c[0] + c[1] x + ... + c[deg] x^deg, deg <= 4.
// Roots closer than root_merge (relative) collapse to one entry. An empty
// result means no real roots, which is a valid outcome rather than an error.
inline std::vector<double> real_roots(const std::vector<double>& coeffs,
                                      const Tolerances& tol = tolerances()) {
    auto roots = detail::roots_any(coeffs);
    std::vector<double> merged;
    for (double r : roots) {
        if (!merged.empty() && std::fabs(r - merged.back()) <= tol.root_merge * std::max(1.0, std::fabs(r)))
            continue;
        merged.push_back(r);
    }
    return merged;
}

inline std::vector<double> real_roots_quartic(const std::array<double, 5>& coeffs,
                                              const Tolerances& tol = tolerances()) {
    return real_roots(std::vector<double>(coeffs.begin(), coeffs.end()), tol);
}

// ---------------------------------------------------------------------------
// linear least squares (normal equations; k is tiny here)
// ---------------------------------------------------------------------------

struct LsqResult {
    std::vector<double> coeffs;
    double rms_residual = 0.0;
};

inline LsqResult lsq_fit(const std::vector<std::vector<double>>& design,
                         const std::vector<double>& target,
                         const Tolerances& tol = tolerances()) {
    const std::size_t n = design.size();
    const std::size_t k = design.empty() ? 0 : design[0].size();
    std::vector<std::vector<double>> ata(k, std::vector<double>(k, 0.0));
    std::vector<double> atb(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            atb[p] += design[i][p] * target[i];
            for (std::size_t q = p; q < k; ++q) ata[p][q] += design[i][p] * design[i][q];
        }
    }
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < p; ++q) ata[p][q] = ata[q][p];

    // condition estimate: ratio of extreme pivots of the normal matrix
    {
        auto m = ata;
        double pmax = 0.0, pmin = std::numeric_limits<double>::infinity();
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t best = col;
            for (std::size_t i = col + 1; i < k; ++i)
                if (std::fabs(m[i][col]) > std::fabs(m[best][col])) best = i;
            std::swap(m[col], m[best]);
            const double piv = std::fabs(m[col][col]);
            pmax = std::max(pmax, piv);
            pmin = std::min(pmin, piv);
            if (piv == 0.0) break;
            for (std::size_t i = col + 1; i < k; ++i) {
                const double f = m[i][col] / m[col][col];
                for (std::size_t j = col; j < k; ++j) m[i][j] -= f * m[col][j];
            }
        }
        if (!(pmin > 0.0) || pmax / pmin > tol.lsq_condition_max)
            throw RankDeficient("lsq_fit: normal matrix condition estimate exceeds bound");
    }

    LsqResult out;
    out.coeffs = solve_linear({ata, atb}, tol);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double pred = 0.0;
        for (std::size_t p = 0; p < k; ++p) pred += design[i][p] * out.coeffs[p];
        const double r = pred - target[i];
        ss += r * r;
    }
    out.rms_residual = std::sqrt(ss / static_cast<double>(n));
    return out;
}

// ---------------------------------------------------------------------------
// scalar golden-section maximization (used for focal-length extrema)
// ---------------------------------------------------------------------------

template <typename F>
double golden_section_max(F&& f, double lo, double hi, double tol_x) {
    constexpr double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol_x) {
        if (fc > fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo); fc = f(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo); fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ebc
