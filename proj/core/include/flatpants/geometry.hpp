#ifndef FLATPANTS_GEOMETRY_HPP
#define FLATPANTS_GEOMETRY_HPP

#include <algorithm>
#include <cmath>

namespace flatpants {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend constexpr Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

/// Unit normal of the segment a->b pointing to its right-hand side.
inline Vec2 right_normal(Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double len = norm(d);
    return {d.y / len, -d.x / len};
}

/// Interior angle at vertex v between rays v->a and v->b, in [0, pi].
/// atan2 form, stable near 0 and pi where the cosine saturates.
inline double angle_at(Vec2 v, Vec2 a, Vec2 b) {
    const Vec2 u = a - v;
    const Vec2 w = b - v;
    if ((u.x == 0.0 && u.y == 0.0) || (w.x == 0.0 && w.y == 0.0)) return 0.0;
    return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

}  // namespace flatpants

#endif
