#ifndef FLATPANTS_DEVELOPMENT_HPP
#define FLATPANTS_DEVELOPMENT_HPP

#include <array>

#include "flatpants/geometry.hpp"
#include "flatpants/params.hpp"

namespace flatpants {

/// One of the three rectangles attached to a triangle side. Corners run
/// counterclockwise: base start A, A + h*n, B + h*n, base end B, where the
/// base A -> B is the triangle side traversed counterclockwise and n is the
/// unit normal pointing away from the triangle.
struct Rectangle {
    std::array<Vec2, 4> corner{};
    Vec2 normal;
    double height = 0.0;
    bool collapsed = false;
};

/// The two planar copies of one cut segment. The gluing isometry matches
/// equal offsets from the singularity copies: a + t*n on one side is the
/// same surface point as b + t*n on the other, t in [0, length]. Traversed
/// along the polygon boundary the two copies run in opposite directions.
struct Identification {
    Vec2 a;       // singularity-side endpoint of the first copy
    Vec2 b;       // singularity-side endpoint of the second copy
    Vec2 normal;  // shared direction of both copies
    double length = 0.0;
};

/// Planar development of a flat pair of pants: the triangle spanned by the
/// three singularity copies plus one rectangle per boundary component.
/// Face interiors never overlap; the complex structure (which edge is glued
/// to which) is carried by the fields, not by planar incidence.
struct Development {
    LengthRadiusParams params;

    /// Singularity copies. The side opposite s[i] has length l[i]; the loop
    /// s[0], s[1], s[2] is counterclockwise (degenerate: zero area).
    std::array<Vec2, 3> s{};

    /// rect[i] is attached along the side from s[(i+1)%3] to s[(i+2)%3].
    std::array<Rectangle, 3> rect{};

    /// ident[i] glues the two lateral edges of rect[i].
    std::array<Identification, 3> ident{};

    /// boundary[i] traces the boundary component c_i: the outer edge of
    /// rect[i], or the triangle side itself when the rectangle is collapsed.
    std::array<std::array<Vec2, 2>, 3> boundary{};
};

/// Lays out the development in canonical position: s[1] at the origin,
/// s[2] at (l[0], 0), s[0] in the closed upper half-plane. Throws
/// std::invalid_argument on invalid or degenerate-pants parameters.
Development build(const LengthRadiusParams& p, double eps_factor = kDefaultEpsFactor);

/// Interior angle of the triangle at s[i], in [0, pi].
double triangle_angle(const Development& d, int i);

struct ConePoint {
    bool on_boundary = false;
    int boundary_index = -1;  // 0-based, set iff on_boundary
    double total_angle = 0.0;
    double curvature = 0.0;
};

/// Total angle around the singularity: the three triangle angles plus pi per
/// non-collapsed rectangle. Curvature is 2*pi - angle at an interior point,
/// pi - angle on the boundary.
ConePoint cone_angle(const Development& d);

}  // namespace flatpants

#endif
