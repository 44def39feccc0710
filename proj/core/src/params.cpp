#include "flatpants/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flatpants {

namespace {

std::string idx(const char* stem, int i) {
    return std::string(stem) + std::to_string(i + 1);
}

bool all_finite(std::span<const double> values, std::vector<Violation>& out) {
    bool ok = true;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            out.push_back({"non-finite", static_cast<int>(i) + 1});
            ok = false;
        }
    }
    return ok;
}

}  // namespace

double wall_tolerance(std::span<const double> values, double eps_factor) {
    double scale = 1.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    return eps_factor * scale;
}

Verdict validate_lr(const LengthRadiusParams& p, double eps_factor) {
    Verdict v;
    const std::array<double, 6> all = {p.l[0], p.l[1], p.l[2], p.r[0], p.r[1], p.r[2]};
    if (!all_finite(all, v.violations)) {
        v.valid = false;
        return v;
    }
    const double eps = wall_tolerance(all, eps_factor);

    for (int i = 0; i < 3; ++i) {
        if (p.l[i] <= eps) v.violations.push_back({idx("l", i) + "-positive", i + 1});
        if (p.r[i] < -eps) v.violations.push_back({idx("r", i) + "-nonnegative", i + 1});
    }
    if (!v.violations.empty()) {
        v.valid = false;
        return v;
    }

    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        if (p.l[i] > p.l[j] + p.l[k] + eps)
            v.violations.push_back({idx("l", i) + "-triangle-inequality", i + 1});
        if (p.r[i] <= eps && p.r[j] <= eps)
            v.violations.push_back({idx("r", i) + "+" + idx("r", j) + "-positive", i + 1});
        if (std::abs(p.l[i] - (p.l[j] + p.l[k])) <= eps && p.r[i] <= eps)
            v.violations.push_back({"degenerate-triangle-requires-" + idx("r", i) + "-positive", i + 1});
    }
    v.valid = v.violations.empty();
    return v;
}

Verdict validate_la(const DistanceParams& p, double eps_factor) {
    Verdict v;
    const std::array<double, 6> all = {p.l[0], p.l[1], p.l[2], p.a[0], p.a[1], p.a[2]};
    if (!all_finite(all, v.violations)) {
        v.valid = false;
        return v;
    }
    const double eps = wall_tolerance(all, eps_factor);

    for (int i = 0; i < 3; ++i) {
        if (p.l[i] <= eps) v.violations.push_back({idx("l", i) + "-positive", i + 1});
        if (p.a[i] <= eps) v.violations.push_back({idx("a", i) + "-positive", i + 1});
    }
    if (!v.violations.empty()) {
        v.valid = false;
        return v;
    }

    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        if (p.l[i] > p.l[j] + p.l[k] + eps)
            v.violations.push_back({idx("l", i) + "-triangle-inequality", i + 1});
        if (p.a[i] > p.a[j] + p.a[k] + eps)
            v.violations.push_back({idx("a", i) + "-triangle-inequality", i + 1});
        // A degenerate triangle of boundary lengths forbids the matching
        // degeneracy of the distance triangle.
        if (std::abs(p.l[i] - (p.l[j] + p.l[k])) <= eps &&
            p.a[i] >= p.a[j] + p.a[k] - eps && p.a[i] <= p.a[j] + p.a[k] + eps)
            v.violations.push_back({"condition-5", i + 1});
    }
    v.valid = v.violations.empty();
    return v;
}

namespace {

void require_valid(const Verdict& v, const char* what) {
    if (!v.valid) {
        std::string msg = std::string(what) + ": invalid parameters:";
        for (const auto& viol : v.violations) msg += " " + viol.name;
        throw std::invalid_argument(msg);
    }
}

}  // namespace

DistanceParams lr_to_la(const LengthRadiusParams& p, double eps_factor) {
    require_valid(validate_lr(p, eps_factor), "lr_to_la");
    DistanceParams out;
    out.l = p.l;
    for (int i = 0; i < 3; ++i) out.a[i] = p.r[(i + 1) % 3] + p.r[(i + 2) % 3];
    return out;
}

LengthRadiusParams la_to_lr(const DistanceParams& p, double eps_factor) {
    require_valid(validate_la(p, eps_factor), "la_to_lr");
    LengthRadiusParams out;
    out.l = p.l;
    for (int i = 0; i < 3; ++i) {
        const double r = (p.a[(i + 1) % 3] + p.a[(i + 2) % 3] - p.a[i]) / 2.0;
        out.r[i] = std::max(r, 0.0);  // cancellation may leave a tiny negative
    }
    return out;
}

std::vector<int> DegeneracyReport::degenerate_rectangles() const {
    std::vector<int> out;
    for (int i = 0; i < 3; ++i)
        if (rectangle_degenerate[i]) out.push_back(i);
    return out;
}

DegeneracyReport classify(const LengthRadiusParams& p, double eps_factor) {
    const std::array<double, 6> all = {p.l[0], p.l[1], p.l[2], p.r[0], p.r[1], p.r[2]};
    for (double v : all)
        if (!std::isfinite(v)) throw std::invalid_argument("classify: non-finite input");
    const double eps = wall_tolerance(all, eps_factor);

    DegeneracyReport rep;
    int zero_count = 0;
    for (int i = 0; i < 3; ++i) {
        rep.rectangle_degenerate[i] = p.r[i] <= eps;
        if (rep.rectangle_degenerate[i]) ++zero_count;
    }

    // Witness = wall with the smallest residual; ties resolved by index so
    // relabeling equivariance is exact.
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        const double resid = std::abs(p.l[i] - (p.l[(i + 1) % 3] + p.l[(i + 2) % 3]));
        if (resid < best) {
            best = resid;
            rep.triangle_witness = i;
        }
    }
    rep.triangle_degenerate = best <= eps;
    if (!rep.triangle_degenerate) rep.triangle_witness = -1;

    const int w = rep.triangle_witness;
    rep.pants_degenerate =
        zero_count >= 2 ||
        (rep.triangle_degenerate && rep.rectangle_degenerate[(w + 1) % 3] &&
         rep.rectangle_degenerate[(w + 2) % 3]);

    if (zero_count == 1) {
        rep.location = DegeneracyReport::Location::Boundary;
        for (int i = 0; i < 3; ++i)
            if (rep.rectangle_degenerate[i]) rep.boundary_index = i;
    }
    return rep;
}

}  // namespace flatpants
