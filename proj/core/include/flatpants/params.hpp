#ifndef FLATPANTS_PARAMS_HPP
#define FLATPANTS_PARAMS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

namespace flatpants {

/// Scale factor for the absolute wall tolerance. Equality tests against a
/// constraint wall (l_i = l_j + l_k, r_i = 0, a_i = a_j + a_k) snap within
/// eps = factor * max(1, max input magnitude).
inline constexpr double kDefaultEpsFactor = 1e-9;

double wall_tolerance(std::span<const double> values, double eps_factor = kDefaultEpsFactor);

/// Boundary lengths l_1,l_2,l_3 and singularity-to-boundary distances r_1,r_2,r_3.
/// Indices are 1-based in documentation and diagnostics, 0-based in code.
struct LengthRadiusParams {
    std::array<double, 3> l{};
    std::array<double, 3> r{};
};

/// Boundary lengths l_1,l_2,l_3 and boundary-to-boundary distances a_1,a_2,a_3,
/// where a_i separates the two boundary components other than c_i.
struct DistanceParams {
    std::array<double, 3> l{};
    std::array<double, 3> a{};
};

struct Violation {
    std::string name;  // constraint id, e.g. "l1-triangle-inequality"
    int index = 0;     // 1-based coordinate the constraint is anchored at, 0 if none
};

struct Verdict {
    bool valid = true;
    std::vector<Violation> violations;
    explicit operator bool() const { return valid; }
};

/// Checks every constraint and reports all violations by name.
/// Non-finite and sign violations are reported alone: the wall constraints
/// are not evaluated on top of them.
Verdict validate_lr(const LengthRadiusParams& p, double eps_factor = kDefaultEpsFactor);
Verdict validate_la(const DistanceParams& p, double eps_factor = kDefaultEpsFactor);

/// a_i = r_{i+1} + r_{i+2} (indices mod 3). Throws std::invalid_argument on
/// invalid input.
DistanceParams lr_to_la(const LengthRadiusParams& p, double eps_factor = kDefaultEpsFactor);

/// Unique inverse of lr_to_la: r_i = (a_{i+1} + a_{i+2} - a_i) / 2.
/// Throws std::invalid_argument on invalid input.
LengthRadiusParams la_to_lr(const DistanceParams& p, double eps_factor = kDefaultEpsFactor);

struct DegeneracyReport {
    enum class Location { Interior, Boundary };

    bool triangle_degenerate = false;
    int triangle_witness = -1;                   // 0-based, -1 when non-degenerate
    std::array<bool, 3> rectangle_degenerate{};  // r_i snapped to zero
    bool pants_degenerate = false;
    Location location = Location::Interior;
    int boundary_index = -1;  // 0-based, set iff location == Boundary

    std::vector<int> degenerate_rectangles() const;  // 0-based indices
};

/// Total on finite inputs; validity is not required (the report explains why
/// a configuration fails to be a pair of pants). Throws only on non-finite
/// input.
DegeneracyReport classify(const LengthRadiusParams& p, double eps_factor = kDefaultEpsFactor);

}  // namespace flatpants

#endif
