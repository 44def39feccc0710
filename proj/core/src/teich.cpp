#include "flatpants/teich.hpp"

#include <cmath>
#include <stdexcept>

namespace flatpants {

Membership membership(const TeichPoint& x, double eps_factor) {
    Membership m;
    const DistanceParams p = x.params();
    const Verdict v = validate_la(p, eps_factor);
    if (!v.valid) {
        m.region = Region::Outside;
        m.violations = v.violations;
        return m;
    }

    const double eps = wall_tolerance(x.coords, eps_factor);
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        if (std::abs(p.l[i] - (p.l[j] + p.l[k])) <= eps) m.stratum.l_walls.push_back(i);
        if (std::abs(p.a[i] - (p.a[j] + p.a[k])) <= eps) m.stratum.a_walls.push_back(i);
    }
    m.region = m.stratum.empty() ? Region::Interior : Region::Boundary;
    return m;
}

namespace {

void require_member(const TeichPoint& x, double eps_factor, const char* what) {
    const Membership m = membership(x, eps_factor);
    if (m.region == Region::Outside) {
        std::string msg = std::string(what) + ": endpoint outside the parameter set:";
        for (const auto& viol : m.violations) msg += " " + viol.name;
        throw std::invalid_argument(msg);
    }
}

}  // namespace

bool segment_in_B(const TeichPoint& x, const TeichPoint& y, int n, double eps_factor) {
    if (n < 1) throw std::invalid_argument("segment_in_B: need at least one sample");
    require_member(x, eps_factor, "segment_in_B");
    require_member(y, eps_factor, "segment_in_B");

    for (int s = 0; s < n; ++s) {
        const double t = n == 1 ? 0.0 : static_cast<double>(s) / (n - 1);
        TeichPoint z;
        for (int c = 0; c < 6; ++c) z.coords[c] = (1.0 - t) * x.coords[c] + t * y.coords[c];
        if (membership(z, eps_factor).region == Region::Outside) return false;
    }
    return true;
}

TeichPoint contract(const TeichPoint& x, double t, const TeichPoint& base, double eps_factor) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("contract: t must lie in [0,1]");
    require_member(x, eps_factor, "contract");
    require_member(base, eps_factor, "contract");
    TeichPoint z;
    for (int c = 0; c < 6; ++c) z.coords[c] = (1.0 - t) * x.coords[c] + t * base.coords[c];
    return z;
}

TeichPoint stratum_witness(int i, int j) {
    if (i < 0 || i > 2 || j < 0 || j > 2)
        throw std::invalid_argument("stratum_witness: indices must be 0, 1 or 2");
    if (i == j)
        throw std::invalid_argument("stratum_witness: the walls at equal indices do not intersect");

    // l degenerate at i forces r_i > 0; putting the zero radius at j != i
    // satisfies that, and r_j = 0 is exactly the a-wall at j.
    LengthRadiusParams p;
    p.l = {1.0, 1.0, 1.0};
    p.r = {1.0, 1.0, 1.0};
    p.l[i] = 2.0;
    p.r[j] = 0.0;
    return TeichPoint::of(lr_to_la(p));
}

}  // namespace flatpants
