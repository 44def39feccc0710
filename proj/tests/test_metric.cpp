#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flatpants/development.hpp"
#include "flatpants/metric_graph.hpp"
#include "flatpants/sampling.hpp"
#include "support/oracles.hpp"

using namespace flatpants;

namespace {

LengthRadiusParams lr(double l1, double l2, double l3, double r1, double r2, double r3) {
    return {{l1, l2, l3}, {r1, r2, r3}};
}

}  // namespace

TEST_CASE("default resolution is a twentieth of the smallest dimension") {
    CHECK(default_resolution(lr(1, 1, 1, 1, 1, 1)) == doctest::Approx(0.05));
    CHECK(default_resolution(lr(1, 1, 1, 0, 1, 1)) == doctest::Approx(0.05));
    CHECK(default_resolution(lr(2, 1.5, 1.5, 0.4, 1, 1)) == doctest::Approx(0.02));
}

TEST_CASE("node count scales with face area over spacing squared") {
    const Development d = build(lr(1, 1, 1, 1, 1, 1));
    const MetricGraph g = build_graph(d, 0.05);
    const double area = 3.0 + std::sqrt(3.0) / 4.0;
    const double base = area / (0.05 * 0.05);
    CHECK(g.nodes.size() >= static_cast<std::size_t>(base));
    CHECK(g.nodes.size() <= static_cast<std::size_t>(4.0 * base));
    CHECK(g.resolution == 0.05);
}

TEST_CASE("spacing is validated") {
    const Development d = build(lr(1, 1, 1, 1, 1, 1));
    CHECK_THROWS_AS((void)build_graph(d, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)build_graph(d, -0.1), std::invalid_argument);
    CHECK_THROWS_AS((void)build_graph(d, 1.5), std::invalid_argument);
}

TEST_CASE("edges are positive and symmetric") {
    const MetricGraph g = build_graph(build(lr(1.2, 1, 0.8, 0.5, 1, 1.5)), 0.1);
    std::map<std::pair<int, int>, double> seen;
    for (int u = 0; u < static_cast<int>(g.adjacency.size()); ++u) {
        for (const auto& [v, w] : g.adjacency[u]) {
            CHECK(w > 0.0);
            seen[{u, v}] = w;
        }
    }
    for (const auto& [edge, w] : seen) {
        const auto rev = seen.find({edge.second, edge.first});
        REQUIRE(rev != seen.end());
        CHECK(rev->second == w);
    }
}

TEST_CASE("every node incarnation sits inside its face") {
    const Development d = build(lr(1.3, 1.1, 0.7, 0.4, 0.9, 1.6));
    const MetricGraph g = build_graph(d, 0.08);
    for (const auto& node : g.nodes) {
        REQUIRE_FALSE(node.empty());
        for (const auto& inc : node) {
            REQUIRE(inc.face >= 0);
            REQUIRE(inc.face <= 3);
            if (inc.face == 0) {
                // barycentric reconstruction stays on the triangle
                const double area2 = std::abs(cross(d.s[1] - d.s[0], d.s[2] - d.s[0]));
                const double w0 = std::abs(cross(d.s[1] - inc.pos, d.s[2] - inc.pos));
                const double w1 = std::abs(cross(d.s[2] - inc.pos, d.s[0] - inc.pos));
                const double w2 = std::abs(cross(d.s[0] - inc.pos, d.s[1] - inc.pos));
                CHECK(w0 + w1 + w2 == doctest::Approx(area2).epsilon(1e-9));
            } else {
                const Rectangle& r = d.rect[inc.face - 1];
                const Vec2 rel = inc.pos - r.corner[0];
                const Vec2 along = r.corner[3] - r.corner[0];
                const double u = dot(rel, along) / dot(along, along);
                const double t = dot(rel, r.normal);
                CHECK(u >= -1e-9);
                CHECK(u <= 1.0 + 1e-9);
                CHECK(t >= -1e-9);
                CHECK(t <= r.height + 1e-9);
            }
        }
    }
}

TEST_CASE("the singularity node carries all three triangle corners") {
    const Development d = build(lr(1, 1, 1, 1, 1, 1));
    const MetricGraph g = build_graph(d, 0.1);
    REQUIRE(g.singularity >= 0);
    const auto& incs = g.nodes[g.singularity];
    int tri_corners = 0;
    for (const auto& inc : incs)
        if (inc.face == 0)
            for (const Vec2 s : d.s)
                if (distance(inc.pos, s) <= 1e-12) ++tri_corners;
    CHECK(tri_corners == 3);
    CHECK(incs.size() >= 9);  // plus two rectangle corners per cut
}

TEST_CASE("distances to the boundaries recover the radii") {
    const MetricGraph g = build_graph(build(lr(1, 1, 1, 1, 2, 3)), 0.05);
    CHECK(oracles::rel_err(distance_to_boundary(g, 0), 1.0) <= 0.05);
    CHECK(oracles::rel_err(distance_to_boundary(g, 1), 2.0) <= 0.05);
    CHECK(oracles::rel_err(distance_to_boundary(g, 2), 3.0) <= 0.05);
}

TEST_CASE("symmetric pants has three equal boundary distances") {
    const MetricGraph g = build_graph(build(lr(1, 1, 1, 1, 1, 1)), 0.05);
    const double d1 = distance_to_boundary(g, 0);
    const double d2 = distance_to_boundary(g, 1);
    const double d3 = distance_to_boundary(g, 2);
    CHECK(oracles::rel_err(d2, d1) <= 0.01);
    CHECK(oracles::rel_err(d3, d1) <= 0.01);
}

TEST_CASE("a vanished radius puts the singularity on its boundary") {
    const MetricGraph g = build_graph(build(lr(1, 1, 1, 0, 1, 1)), 0.05);
    CHECK(distance_to_boundary(g, 0) == 0.0);
    CHECK(oracles::rel_err(distance_to_boundary(g, 1), 1.0) <= 0.05);
    CHECK(oracles::rel_err(distance_between_boundaries(g, 1, 2), 2.0) <= 0.05);
}

TEST_CASE("distances between boundaries recover the gaps") {
    SUBCASE("symmetric") {
        const MetricGraph g = build_graph(build(lr(1, 1, 1, 1, 1, 1)), 0.05);
        CHECK(oracles::rel_err(distance_between_boundaries(g, 1, 2), 2.0) <= 0.05);
    }
    SUBCASE("staircase") {
        const MetricGraph g = build_graph(build(lr(4, 4, 4, 3, 2, 1)), 0.2);
        CHECK(oracles::rel_err(distance_between_boundaries(g, 0, 1), 5.0) <= 0.05);
        CHECK(oracles::rel_err(distance_between_boundaries(g, 1, 2), 3.0) <= 0.05);
        CHECK(oracles::rel_err(distance_between_boundaries(g, 2, 0), 4.0) <= 0.05);
    }
    SUBCASE("equal components refused") {
        const MetricGraph g = build_graph(build(lr(1, 1, 1, 1, 1, 1)), 0.2);
        CHECK_THROWS_AS((void)distance_between_boundaries(g, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)distance_between_boundaries(g, 0, 3), std::invalid_argument);
    }
}

TEST_CASE("oracle agreement on random pants") {
    Rng rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        const LengthRadiusParams p = sample_lr_compact(rng);
        const MetricGraph g = build_graph(build(p), default_resolution(p));
        for (int i = 0; i < 3; ++i)
            CHECK(oracles::rel_err(distance_to_boundary(g, i), p.r[i]) <= 0.05);
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            CHECK(oracles::rel_err(distance_between_boundaries(g, j, k), p.r[j] + p.r[k]) <= 0.05);
        }
    }
}

TEST_CASE("shortest paths match an all-pairs oracle on a coarse graph") {
    const MetricGraph g = build_graph(build(lr(1, 1, 1, 1, 1, 1)), 0.45);
    const int n = static_cast<int>(g.nodes.size());
    std::vector<std::array<double, 3>> edges;
    for (int u = 0; u < n; ++u)
        for (const auto& [v, w] : g.adjacency[u])
            if (u < v) edges.push_back({double(u), double(v), w});
    const auto all = oracles::floyd_warshall(n, edges);
    for (int src = 0; src < n; ++src) {
        const std::vector<double> d = shortest_paths(g, src);
        for (int v = 0; v < n; ++v) CHECK(d[v] == doctest::Approx(all[src][v]).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)shortest_paths(g, -1), std::invalid_argument);
    CHECK_THROWS_AS((void)shortest_paths(g, n), std::invalid_argument);
}

TEST_CASE("the graph metric obeys the triangle inequality") {
    const MetricGraph g = build_graph(build(lr(1.4, 1.2, 1, 0.6, 1, 1.4)), 0.12);
    const int n = static_cast<int>(g.nodes.size());
    Rng rng(62);
    for (int trial = 0; trial < 8; ++trial) {
        const int a = rng.index(n), b = rng.index(n);
        const std::vector<double> da = shortest_paths(g, a);
        const std::vector<double> db = shortest_paths(g, b);
        for (int z = 0; z < n; ++z) CHECK(da[z] <= da[b] + db[z] + 1e-9);
    }
}

TEST_CASE("graph construction is deterministic") {
    const LengthRadiusParams p = lr(1.1, 0.9, 1, 0.7, 1.2, 0.5);
    const MetricGraph g1 = build_graph(build(p), 0.1);
    const MetricGraph g2 = build_graph(build(p), 0.1);
    REQUIRE(g1.nodes.size() == g2.nodes.size());
    CHECK(g1.singularity == g2.singularity);
    for (std::size_t i = 0; i < g1.adjacency.size(); ++i) {
        REQUIRE(g1.adjacency[i].size() == g2.adjacency[i].size());
        for (std::size_t k = 0; k < g1.adjacency[i].size(); ++k) {
            CHECK(g1.adjacency[i][k].first == g2.adjacency[i][k].first);
            CHECK(g1.adjacency[i][k].second == g2.adjacency[i][k].second);
        }
    }
}

TEST_CASE("structure distance vanishes exactly on the diagonal") {
    const LengthRadiusParams p = lr(1.2, 1, 0.9, 0.8, 1.1, 0.6);
    CHECK(structure_distance(p, p, 32, 7) == 0.0);
}

TEST_CASE("structure distance is exactly symmetric at a fixed seed") {
    const LengthRadiusParams p = lr(1.2, 1, 0.9, 0.8, 1.1, 0.6);
    const LengthRadiusParams q = lr(1.1, 1.05, 0.95, 0.9, 1.0, 0.7);
    CHECK(structure_distance(p, q, 48, 3) == structure_distance(q, p, 48, 3));
}

TEST_CASE("a small radius perturbation moves the structure a little") {
    const LengthRadiusParams p = lr(1, 1, 1, 1, 1, 1);
    const LengthRadiusParams q = lr(1, 1, 1, 1, 1, 1.1);
    const double d = structure_distance(p, q, 64, 5);
    CHECK(d > 0.0);
    CHECK(d <= 0.35);  // parameter gap 0.1 stretched by at most the mesh factor
}

TEST_CASE("structure distance shrinks with the perturbation") {
    const LengthRadiusParams p = lr(1.1, 1, 0.95, 0.9, 1.05, 1);
    double last = 1e9;
    for (const double delta : {1e-1, 1e-2, 1e-3}) {
        LengthRadiusParams q = p;
        for (int i = 0; i < 3; ++i) {
            q.l[i] += delta;
            q.r[i] += delta;
        }
        const double d = structure_distance(p, q, 48, 9);
        CHECK(d < last);
        last = d;
    }
}

TEST_CASE("structure distance rejects bad inputs") {
    const LengthRadiusParams p = lr(1, 1, 1, 1, 1, 1);
    CHECK_THROWS_AS((void)structure_distance(p, p, 0, 1), std::invalid_argument);
    CHECK_THROWS_WITH_AS(structure_distance(p, lr(3, 1, 1, 1, 1, 1), 8, 1),
                         doctest::Contains("l1-triangle-inequality"), std::invalid_argument);
    // interior vs boundary singularity
    CHECK_THROWS_AS((void)structure_distance(p, lr(1, 1, 1, 0, 1, 1), 8, 1),
                    std::invalid_argument);
    // boundary singularities on different components
    CHECK_THROWS_AS((void)structure_distance(lr(1, 1, 1, 0, 1, 1), lr(1, 1, 1, 1, 0, 1), 8, 1),
                    std::invalid_argument);
}

TEST_CASE("matching boundary singularities compare fine") {
    const double d = structure_distance(lr(1, 1, 1, 0, 1, 1), lr(1, 1, 1, 0, 1.1, 1), 32, 11);
    CHECK(d >= 0.0);
    CHECK(d <= 0.35);
}
