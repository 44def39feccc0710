#ifndef FLATPANTS_TEICH_HPP
#define FLATPANTS_TEICH_HPP

#include <array>
#include <vector>

#include "flatpants/params.hpp"

namespace flatpants {

/// A point of the parameter cone B in R^6, coordinates (l1,l2,l3,a1,a2,a3).
struct TeichPoint {
    std::array<double, 6> coords{};

    DistanceParams params() const {
        return {{coords[0], coords[1], coords[2]}, {coords[3], coords[4], coords[5]}};
    }
    static TeichPoint of(const DistanceParams& p) {
        return {{p.l[0], p.l[1], p.l[2], p.a[0], p.a[1], p.a[2]}};
    }
};

/// Contraction target used by contract(); an interior point.
inline constexpr TeichPoint kBasepoint{{1.0, 1.0, 1.0, 2.0, 2.0, 2.0}};

/// Which walls of B a boundary point sits on. At most one index per family;
/// the same index in both families is impossible for a member.
struct Stratum {
    std::vector<int> l_walls;  // 0-based i with l_i = l_j + l_k
    std::vector<int> a_walls;  // 0-based i with a_i = a_j + a_k
    bool empty() const { return l_walls.empty() && a_walls.empty(); }
};

enum class Region { Interior, Boundary, Outside };

struct Membership {
    Region region = Region::Outside;
    Stratum stratum;                   // populated when region == Boundary
    std::vector<Violation> violations; // populated when region == Outside
};

/// Classifies a 6-tuple against B. Points within the wall tolerance of an
/// equality are snapped onto the wall and reported as boundary, so the
/// verdict is reproducible near the strata. Non-finite coordinates are
/// reported as outside with a violation, never thrown.
Membership membership(const TeichPoint& x, double eps_factor = kDefaultEpsFactor);

/// True iff all n points spaced uniformly along [x, y] (endpoints included)
/// are members. Convexity of B promises true whenever x and y are members;
/// a false return is evidence of an implementation defect, not of the
/// geometry. Throws when an endpoint is not a member or n < 1.
bool segment_in_B(const TeichPoint& x, const TeichPoint& y, int n,
                  double eps_factor = kDefaultEpsFactor);

/// Straight-line contraction (1-t)*x + t*base. Throws when t is outside
/// [0,1] or an endpoint is not a member.
TeichPoint contract(const TeichPoint& x, double t, const TeichPoint& base = kBasepoint,
                    double eps_factor = kDefaultEpsFactor);

/// A member lying on the l-wall at i and the a-wall at j simultaneously
/// (0-based, i != j): the intersection is nonempty exactly when the indices
/// differ. Throws on i == j or out-of-range indices.
TeichPoint stratum_witness(int i, int j);

}  // namespace flatpants

#endif
