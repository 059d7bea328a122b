#pragma once

#include <cmath>

namespace ebc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double k) const { return {k * x, k * y}; }
    Vec2 operator/(double k) const { return {x / k, y / k}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double k, const Vec2& v) { return {k * v.x, k * v.y}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

inline Vec2 normalized(const Vec2& v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

inline Vec2 midpoint(const Vec2& a, const Vec2& b) {
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

// smaller of the two angles between the lines spanned by a and b (mod pi)
inline double line_angle(const Vec2& a, const Vec2& b) {
    const double c = std::fabs(cross(a, b));
    const double d = std::fabs(dot(a, b));
    return std::atan2(c, d);
}

}  // namespace ebc
