#ifndef FLATPANTS_METRIC_GRAPH_HPP
#define FLATPANTS_METRIC_GRAPH_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "flatpants/development.hpp"

namespace flatpants {

/// Piecewise-linear sample graph of the quotient surface. A node may carry
/// several planar incarnations, one per copy of the point in the
/// development: the two copies of each identified cut point, the far corners
/// of a cut meeting its boundary circle, and all three singularity copies
/// collapse to single nodes.
struct MetricGraph {
    struct Incarnation {
        int face = 0;  // 0 = triangle, 1..3 = rectangle R_i
        Vec2 pos;      // planar position in the development
    };

    std::vector<std::vector<Incarnation>> nodes;
    std::vector<std::vector<std::pair<int, double>>> adjacency;  // symmetric, positive weights
    int singularity = -1;
    std::array<std::vector<int>, 3> boundary_nodes;  // nodes lying on c_i
    double resolution = 0.0;
};

/// min(l_i, positive r_i) / 20.
double default_resolution(const LengthRadiusParams& p);

/// Samples every face on a grid of spacing <= h (all corners and glued edges
/// included) and joins same-face samples closer than 2.5 h by straight
/// segments, which are geodesic inside a convex face. The result is
/// connected. Throws when h is non-positive or larger than the smallest
/// face dimension.
MetricGraph build_graph(const Development& d, double h);

/// Dijkstra from `source`: distance to every node.
std::vector<double> shortest_paths(const MetricGraph& g, int source);

/// Graph distance from the singularity to boundary component c_i (0-based);
/// approximates r_i, and is exactly 0 when the singularity lies on c_i.
double distance_to_boundary(const MetricGraph& g, int i);

/// Graph distance between boundary components c_j and c_k, j != k;
/// approximates a_i = r_j + r_k for the remaining index i.
double distance_between_boundaries(const MetricGraph& g, int j, int k);

/// Monte-Carlo sup-distance between the flat structures of p and q over
/// n_pairs sampled point pairs. Points correspond through the face-wise
/// affine map matching triangle vertices and rectangle corners; both
/// structures are measured on one shared combinatorial graph carrying two
/// sets of edge weights, so the result is exactly 0 for p == q and exactly
/// symmetric in p and q at a fixed seed. Requires both parameter sets valid,
/// non-degenerate, and of the same combinatorial type (interior singularity,
/// or boundary singularity at the same index). h <= 0 selects the default
/// resolution of the combined reference structure.
double structure_distance(const LengthRadiusParams& p, const LengthRadiusParams& q,
                          int n_pairs, std::uint64_t seed = 0, double h = 0.0);

}  // namespace flatpants

#endif
