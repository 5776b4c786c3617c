// Small dimension-generic vector helpers. Mesh vertices live in R^n (n >= 3),
// charts and tangent directions in R^2.
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace gcvt {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const {
        double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
    }
    Vec2 rotated(double angle) const {
        double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

inline double angle_of(const Vec2& v) { return std::atan2(v.y, v.x); }

// n-dimensional helpers over contiguous coordinate spans.
inline double dot_n(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double dist_n(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double norm_n(std::span<const double> a) { return std::sqrt(dot_n(a, a)); }

// Area of the triangle (a, b, c) in R^n via the Gram identity
// 4 A^2 = |u|^2 |v|^2 - (u.v)^2 with u = b - a, v = c - a.
inline double triangle_area_n(std::span<const double> a, std::span<const double> b,
                              std::span<const double> c) {
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double u = b[i] - a[i];
        double v = c[i] - a[i];
        uu += u * u;
        vv += v * v;
        uv += u * v;
    }
    double g = uu * vv - uv * uv;
    return g > 0.0 ? 0.5 * std::sqrt(g) : 0.0;
}

// Interior angle at a of the triangle (a, b, c).
inline double corner_angle_n(std::span<const double> a, std::span<const double> b,
                             std::span<const double> c) {
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double u = b[i] - a[i];
        double v = c[i] - a[i];
        uu += u * u;
        vv += v * v;
        uv += u * v;
    }
    double den = std::sqrt(uu * vv);
    if (den <= 0.0) return 0.0;
    double cosv = uv / den;
    if (cosv > 1.0) cosv = 1.0;
    if (cosv < -1.0) cosv = -1.0;
    return std::acos(cosv);
}

struct BaryPoint {
    double b[3];
};

// Barycentric coordinates of p in the 2D triangle (a, b, c).
inline BaryPoint barycentric_2d(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    Vec2 v0 = b - a, v1 = c - a, v2 = p - a;
    double den = v0.cross(v1);
    double l1 = 0.0, l2 = 0.0;
    if (den != 0.0) {
        l1 = v2.cross(v1) / den;
        l2 = v0.cross(v2) / den;
    }
    return {{1.0 - l1 - l2, l1, l2}};
}

inline Vec2 bary_to_2d(const BaryPoint& bp, const Vec2& a, const Vec2& b, const Vec2& c) {
    return a * bp.b[0] + b * bp.b[1] + c * bp.b[2];
}

}  // namespace gcvt
