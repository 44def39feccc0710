#include "flatpants/development.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace flatpants {

Development build(const LengthRadiusParams& p, double eps_factor) {
    const DegeneracyReport rep = classify(p, eps_factor);
    if (rep.pants_degenerate) {
        const auto zeros = rep.degenerate_rectangles();
        std::string msg = "build: degenerate pair of pants: ";
        if (rep.triangle_degenerate &&
            std::none_of(zeros.begin(), zeros.end(),
                         [&](int i) { return i == rep.triangle_witness; }))
            msg += "triangle and two rectangles degenerate";
        else
            msg += (zeros.size() == 3 ? "three" : "two") + std::string(" rectangles degenerate");
        throw std::invalid_argument(msg);
    }
    const Verdict v = validate_lr(p, eps_factor);
    if (!v.valid) {
        std::string msg = "build: invalid parameters:";
        for (const auto& viol : v.violations) msg += " " + viol.name;
        throw std::invalid_argument(msg);
    }

    Development d;
    d.params = p;

    // Law of cosines places s[0]; a degenerate triangle lands exactly on the
    // base segment because the radicand is clamped.
    const double l1 = p.l[0], l2 = p.l[1], l3 = p.l[2];
    const double x = (l1 * l1 + l3 * l3 - l2 * l2) / (2.0 * l1);
    const double y = std::sqrt(std::max(0.0, l3 * l3 - x * x));
    d.s[1] = {0.0, 0.0};
    d.s[2] = {l1, 0.0};
    d.s[0] = {x, y};

    for (int i = 0; i < 3; ++i) {
        const Vec2 a = d.s[(i + 1) % 3];
        const Vec2 b = d.s[(i + 2) % 3];
        Rectangle& r = d.rect[i];
        r.collapsed = rep.rectangle_degenerate[i];
        r.height = r.collapsed ? 0.0 : p.r[i];
        r.normal = right_normal(a, b);
        r.corner = {a, a + r.height * r.normal, b + r.height * r.normal, b};

        d.ident[i] = {a, b, r.normal, r.height};
        d.boundary[i] = {r.corner[1], r.corner[2]};
    }
    return d;
}

namespace {

// Angle opposite `opp` from the three side lengths, via the half-angle
// tangent. With the sides sorted A >= B >= C every factor below is free of
// cancellation (A - B is exact by Sterbenz, C - (A - B) nearly so), so
// needle and flat triangles come out to a few ulps instead of sqrt(eps).
double angle_from_sides(double opp, double u, double v) {
    std::array<double, 3> s = {opp, u, v};
    std::sort(s.begin(), s.end(), std::greater<>());
    const double A = s[0], B = s[1], C = s[2];
    const double whole = A + (B + C);
    const double slack = std::max(0.0, C - (A - B));  // 0 exactly on the wall
    const double bulge = C + (A - B);
    const double spread = A + (B - C);
    if (opp >= A) return 2.0 * std::atan2(std::sqrt(bulge * spread), std::sqrt(slack * whole));
    if (opp <= C) return 2.0 * std::atan2(std::sqrt(slack * bulge), std::sqrt(spread * whole));
    return 2.0 * std::atan2(std::sqrt(slack * spread), std::sqrt(bulge * whole));
}

}  // namespace

double triangle_angle(const Development& d, int i) {
    return angle_from_sides(d.params.l[i], d.params.l[(i + 1) % 3], d.params.l[(i + 2) % 3]);
}

ConePoint cone_angle(const Development& d) {
    ConePoint c;
    double theta = 0.0;
    for (int i = 0; i < 3; ++i) theta += triangle_angle(d, i);
    for (int i = 0; i < 3; ++i) {
        if (d.rect[i].collapsed) {
            c.on_boundary = true;
            c.boundary_index = i;
        } else {
            theta += std::numbers::pi;
        }
    }
    c.total_angle = theta;
    c.curvature = (c.on_boundary ? 1.0 : 2.0) * std::numbers::pi - theta;
    return c;
}

}  // namespace flatpants
