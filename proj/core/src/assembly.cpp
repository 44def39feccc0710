#include "flatpants/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flatpants {

namespace {

constexpr double kPi = std::numbers::pi;

void check_spec(const SurfaceSpec& s) {
    if (s.genus < 0 || s.boundary_count < 0)
        throw std::invalid_argument("surface spec: negative genus or boundary count");
    if (s.boundary_count == 0 && !s.boundary_cones.empty())
        throw std::invalid_argument("surface spec: boundary cones on a closed surface");
    for (double t : s.interior_cones) {
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::invalid_argument("surface spec: interior cone angle must be positive and finite");
        if (t == 2.0 * kPi)
            throw std::invalid_argument("surface spec: interior angle 2*pi is not a cone point");
    }
    for (double t : s.boundary_cones) {
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::invalid_argument("surface spec: boundary cone angle must be positive and finite");
        if (t == kPi)
            throw std::invalid_argument("surface spec: boundary angle pi is not a cone point");
    }
}

}  // namespace

double euler_characteristic(const SurfaceSpec& s) {
    return 2.0 - 2.0 * s.genus - s.boundary_count;
}

double gauss_bonnet_closed(const SurfaceSpec& s) {
    check_spec(s);
    if (s.boundary_count != 0)
        throw std::invalid_argument("gauss_bonnet_closed: surface has boundary, use the bounded form");
    double lhs = 0.0;
    for (double t : s.interior_cones) lhs += 2.0 * kPi - t;
    return lhs - (4.0 - 4.0 * s.genus) * kPi;
}

double gauss_bonnet_bounded(const SurfaceSpec& s) {
    check_spec(s);
    double lhs = 0.0;
    for (double t : s.interior_cones) lhs += 2.0 * kPi - t;
    for (double t : s.boundary_cones) lhs += kPi - t;
    return lhs - 2.0 * kPi * euler_characteristic(s);
}

SurfaceSpec double_of(const SurfaceSpec& s) {
    check_spec(s);
    if (s.boundary_count == 0)
        throw std::invalid_argument("double_of: surface is already closed");
    SurfaceSpec d;
    d.genus = 2 * s.genus + s.boundary_count - 1;
    d.boundary_count = 0;
    for (double t : s.interior_cones) {
        d.interior_cones.push_back(t);
        d.interior_cones.push_back(t);
    }
    // A boundary cone meets its mirror image along the boundary: one
    // interior cone of twice the angle.
    for (double t : s.boundary_cones) d.interior_cones.push_back(2.0 * t);
    return d;
}

SurfaceSpec pants_spec(const LengthRadiusParams& p) {
    const Verdict v = validate_lr(p);
    if (!v.valid) {
        std::string msg = "pants_spec: invalid parameters:";
        for (const auto& viol : v.violations) msg += " " + viol.name;
        throw std::invalid_argument(msg);
    }
    const DegeneracyReport rep = classify(p);
    if (rep.pants_degenerate)
        throw std::invalid_argument("pants_spec: degenerate pair of pants");

    SurfaceSpec s;
    s.genus = 0;
    s.boundary_count = 3;
    if (rep.location == DegeneracyReport::Location::Boundary)
        s.boundary_cones.push_back(3.0 * kPi);
    else
        s.interior_cones.push_back(4.0 * kPi);
    return s;
}

SurfaceSpec double_of(const LengthRadiusParams& p) { return double_of(pants_spec(p)); }

namespace {

std::string slot_name(BoundaryRef r) {
    return "pants " + std::to_string(r.pants + 1) + " boundary " + std::to_string(r.boundary + 1);
}

}  // namespace

GlueResult glue(const GluingSpec& g) {
    const int V = static_cast<int>(g.pants.size());
    if (V == 0) throw std::invalid_argument("glue: no pants");

    for (int i = 0; i < V; ++i) {
        const Verdict v = validate_lr(g.pants[i]);
        if (!v.valid)
            throw std::invalid_argument("glue: pants " + std::to_string(i + 1) + " invalid");
        const DegeneracyReport rep = classify(g.pants[i]);
        if (rep.pants_degenerate)
            throw std::invalid_argument("glue: pants " + std::to_string(i + 1) + " degenerate");
        if (rep.location == DegeneracyReport::Location::Boundary)
            throw std::invalid_argument("glue: pants " + std::to_string(i + 1) +
                                        " has a boundary singularity; only interior singularities glue");
    }

    const int E = static_cast<int>(g.pairings.size());
    if (2 * E != 3 * V)
        throw std::invalid_argument("glue: matching not perfect (" + std::to_string(E) +
                                    " pairings for " + std::to_string(3 * V) + " boundary slots)");

    std::vector<bool> used(3 * V, false);
    auto claim = [&](BoundaryRef r) {
        if (r.pants < 0 || r.pants >= V || r.boundary < 0 || r.boundary >= 3)
            throw std::invalid_argument("glue: slot out of range: " + slot_name(r));
        const int slot = 3 * r.pants + r.boundary;
        if (used[slot]) throw std::invalid_argument("glue: slot used twice: " + slot_name(r));
        used[slot] = true;
    };

    GlueResult out;
    std::vector<int> parent(V);
    for (int i = 0; i < V; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (std::size_t k = 0; k < g.pairings.size(); ++k) {
        const Pairing& pr = g.pairings[k];
        claim(pr.first);
        claim(pr.second);
        const double la = g.pants[pr.first.pants].l[pr.first.boundary];
        const double lb = g.pants[pr.second.pants].l[pr.second.boundary];
        if (std::abs(la - lb) > 1e-12 * std::max(la, lb))
            throw std::invalid_argument("glue: length mismatch in pairing " + std::to_string(k + 1) +
                                        " (" + slot_name(pr.first) + " has l=" + std::to_string(la) +
                                        ", " + slot_name(pr.second) + " has l=" + std::to_string(lb) + ")");
        out.glued_lengths.push_back(la);
        parent[find(pr.first.pants)] = find(pr.second.pants);
    }

    for (int i = 0; i < V; ++i)
        if (find(i) != find(0))
            throw std::invalid_argument("glue: assembly is disconnected; genus is per-component, refuse");

    out.spec.genus = E - V + 1;
    out.spec.boundary_count = 0;
    out.spec.interior_cones.assign(static_cast<std::size_t>(V), 4.0 * kPi);
    return out;
}

FeasibilityVerdict decomposition_feasible(int genus, int n_singularities) {
    if (genus < 2)
        throw std::invalid_argument("decomposition_feasible: genus below 2 admits no pants decomposition");
    if (n_singularities < 1)
        throw std::invalid_argument("decomposition_feasible: a closed flat surface of genus >= 2 carries at least one singularity");

    FeasibilityVerdict v;
    v.pants_needed = 2 * genus - 2;
    v.singularity_capacity = 2 * n_singularities;
    if (v.pants_needed > v.singularity_capacity) {
        v.kind = Feasibility::Infeasible;
        v.reason = "a decomposition cuts the surface into " + std::to_string(v.pants_needed) +
                   " pants, each needing a singularity on its closure, but " +
                   std::to_string(n_singularities) +
                   " singularit" + (n_singularities == 1 ? "y" : "ies") +
                   " can lie on at most " + std::to_string(v.singularity_capacity) +
                   " pants closures";
    } else {
        v.kind = Feasibility::NotRuledOut;
        v.reason = "counting obstruction passes (" + std::to_string(v.pants_needed) +
                   " pants within budget " + std::to_string(v.singularity_capacity) +
                   "); feasibility itself is not established";
    }
    return v;
}

}  // namespace flatpants
