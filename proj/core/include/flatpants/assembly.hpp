#ifndef FLATPANTS_ASSEMBLY_HPP
#define FLATPANTS_ASSEMBLY_HPP

#include <string>
#include <vector>

#include "flatpants/params.hpp"

namespace flatpants {

/// Combinatorial description of a flat surface: genus, boundary count, and
/// the multiset of cone angles (interior cones theta, boundary cones tau).
struct SurfaceSpec {
    int genus = 0;
    int boundary_count = 0;
    std::vector<double> interior_cones;
    std::vector<double> boundary_cones;
};

/// 2 - 2*genus - boundary_count.
double euler_characteristic(const SurfaceSpec& s);

/// Residual of the closed-surface angle-deficit identity
///   sum(2*pi - theta_i) = (4 - 4g)*pi.
/// Zero (within rounding) iff the spec is realizable by a closed flat
/// surface with those cones. Throws std::invalid_argument when the spec has
/// boundary or carries an illegal angle (theta = 2*pi, tau = pi, or
/// non-positive / non-finite).
double gauss_bonnet_closed(const SurfaceSpec& s);

/// Residual of the general bounded form
///   sum(2*pi - theta_i) + sum(pi - tau_j) = 2*pi*chi.
/// For genus 0 this is the disc-with-holes identity sum = (4 - 2b)*pi.
double gauss_bonnet_bounded(const SurfaceSpec& s);

/// Mirror double of a bounded surface: genus 2g + b - 1, closed; every
/// interior cone appears twice, every boundary cone tau becomes one
/// interior cone of angle 2*tau. Throws if s has no boundary.
SurfaceSpec double_of(const SurfaceSpec& s);

/// The surface spec of one flat pair of pants: genus 0, three boundary
/// components, one cone (interior 4*pi, or boundary 3*pi when some r_i = 0).
/// Throws on invalid or degenerate parameters.
SurfaceSpec pants_spec(const LengthRadiusParams& p);

/// double_of(pants_spec(p)): a closed genus-2 surface.
SurfaceSpec double_of(const LengthRadiusParams& p);

struct BoundaryRef {
    int pants = 0;     // index into GluingSpec::pants
    int boundary = 0;  // 0, 1, 2
    friend bool operator==(BoundaryRef, BoundaryRef) = default;
};

struct Pairing {
    BoundaryRef first;
    BoundaryRef second;
};

/// Pants to be glued along boundary circles of matching length. Every one of
/// the 3 * |pants| boundary slots must appear in exactly one pairing; a
/// pants may be glued to itself along two of its own boundaries.
struct GluingSpec {
    std::vector<LengthRadiusParams> pants;
    std::vector<Pairing> pairings;
};

struct GlueResult {
    SurfaceSpec spec;                  // closed; one 4*pi cone per pants
    std::vector<double> glued_lengths; // audited common length per pairing
};

/// Assembles the closed surface. Requires every pants valid, non-degenerate,
/// with interior singularity; pairings a perfect matching with equal lengths
/// (1e-12 relative); assembly connected. Genus = pairings - pants + 1.
/// Violations throw std::invalid_argument naming the offending pairing.
GlueResult glue(const GluingSpec& g);

enum class Feasibility { Infeasible, NotRuledOut };

struct FeasibilityVerdict {
    Feasibility kind = Feasibility::NotRuledOut;
    int pants_needed = 0;          // 2*genus - 2
    int singularity_capacity = 0;  // 2 * n_singularities
    std::string reason;
};

/// Counting obstruction to decomposing a closed flat surface of the given
/// genus and singularity count into pairs of pants by disjoint simple closed
/// geodesics: each of the 2g-2 pants needs a singularity on its closure and
/// one singularity can serve at most two pants. INFEASIBLE when
/// 2g-2 > 2n; otherwise NOT_RULED_OUT (the check proves only the
/// obstruction, never feasibility). Requires genus >= 2 and n >= 1.
FeasibilityVerdict decomposition_feasible(int genus, int n_singularities);

}  // namespace flatpants

#endif
