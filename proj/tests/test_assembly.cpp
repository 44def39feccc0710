#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "flatpants/assembly.hpp"
#include "flatpants/sampling.hpp"
#include "support/oracles.hpp"

using namespace flatpants;

namespace {

constexpr double pi = std::numbers::pi;

LengthRadiusParams lr(double l1, double l2, double l3, double r1, double r2, double r3) {
    return {{l1, l2, l3}, {r1, r2, r3}};
}

SurfaceSpec spec(int g, int b, std::vector<double> interior, std::vector<double> boundary = {}) {
    SurfaceSpec s;
    s.genus = g;
    s.boundary_count = b;
    s.interior_cones = std::move(interior);
    s.boundary_cones = std::move(boundary);
    return s;
}

// V pants in a ring: slot 1 of pants i meets slot 2 of pants i+1, and the
// remaining third slots pair up across consecutive pants.
GluingSpec ring_of(int V) {
    GluingSpec g;
    for (int i = 0; i < V; ++i) g.pants.push_back(lr(1, 1, 1, 1, 1, 1));
    for (int i = 0; i < V; ++i) g.pairings.push_back({{i, 0}, {(i + 1) % V, 1}});
    for (int i = 0; i < V; i += 2) g.pairings.push_back({{i, 2}, {i + 1, 2}});
    return g;
}

}  // namespace

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(spec(0, 3, {4 * pi})) == -1.0);
    CHECK(euler_characteristic(spec(2, 0, {})) == -2.0);
    CHECK(euler_characteristic(spec(1, 0, {})) == 0.0);
    CHECK(euler_characteristic(spec(0, 0, {})) == 2.0);
}

TEST_CASE("closed angle-deficit identity") {
    SUBCASE("genus 2 with two 4 pi cones balances") {
        CHECK(std::abs(gauss_bonnet_closed(spec(2, 0, {4 * pi, 4 * pi}))) <= 1e-9);
    }
    SUBCASE("flat torus balances with no cones") {
        CHECK(gauss_bonnet_closed(spec(1, 0, {})) == 0.0);
    }
    SUBCASE("eight pi-cones on a sphere leave residual 4 pi") {
        const SurfaceSpec s = spec(0, 0, std::vector<double>(8, pi));
        CHECK(gauss_bonnet_closed(s) == doctest::Approx(4 * pi).epsilon(1e-14));
    }
    SUBCASE("bounded specs are refused") {
        CHECK_THROWS_AS((void)gauss_bonnet_closed(spec(0, 3, {4 * pi})), std::invalid_argument);
    }
}

TEST_CASE("bounded angle-deficit identity") {
    SUBCASE("pants with one 4 pi cone balances") {
        CHECK(std::abs(gauss_bonnet_bounded(spec(0, 3, {4 * pi}))) <= 1e-9);
    }
    SUBCASE("pants without cones misses by exactly 2 pi") {
        CHECK(gauss_bonnet_bounded(spec(0, 3, {})) == 2 * pi);
    }
    SUBCASE("pants with one boundary 3 pi cone balances") {
        CHECK(std::abs(gauss_bonnet_bounded(spec(0, 3, {}, {3 * pi}))) <= 1e-9);
    }
    SUBCASE("disc with one pi/2 boundary cone is inconsistent") {
        CHECK(gauss_bonnet_bounded(spec(0, 1, {}, {pi / 2})) ==
              doctest::Approx(pi / 2 - 2 * pi).epsilon(1e-14));
    }
}

TEST_CASE("illegal angles are rejected") {
    CHECK_THROWS_AS((void)gauss_bonnet_closed(spec(1, 0, {2 * pi})), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_bonnet_bounded(spec(0, 1, {}, {pi})), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_bonnet_closed(spec(1, 0, {-1.0})), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_bonnet_closed(spec(1, 0, {0.0})), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_bonnet_closed(spec(-1, 0, {})), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_bonnet_bounded(spec(1, 0, {}, {3.0})), std::invalid_argument);
}

TEST_CASE("pants_spec reflects the singularity location") {
    const SurfaceSpec interior = pants_spec(lr(1, 1, 1, 1, 1, 1));
    CHECK(interior.genus == 0);
    CHECK(interior.boundary_count == 3);
    REQUIRE(interior.interior_cones.size() == 1);
    CHECK(interior.interior_cones[0] == 4 * pi);
    CHECK(interior.boundary_cones.empty());

    const SurfaceSpec boundary = pants_spec(lr(1, 1, 1, 0, 1, 1));
    CHECK(boundary.interior_cones.empty());
    REQUIRE(boundary.boundary_cones.size() == 1);
    CHECK(boundary.boundary_cones[0] == 3 * pi);

    CHECK_THROWS_AS((void)pants_spec(lr(3, 1, 1, 1, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)pants_spec(lr(1, 1, 1, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("the double of a pants is a closed genus-2 surface") {
    SUBCASE("interior singularity doubles to two 4 pi cones") {
        const SurfaceSpec d = double_of(lr(1, 1, 1, 1, 1, 1));
        CHECK(d.genus == 2);
        CHECK(d.boundary_count == 0);
        REQUIRE(d.interior_cones.size() == 2);
        CHECK(d.interior_cones[0] == 4 * pi);
        CHECK(d.interior_cones[1] == 4 * pi);
        CHECK(std::abs(gauss_bonnet_closed(d)) <= 1e-9);
    }
    SUBCASE("boundary singularity doubles to one 6 pi cone") {
        const SurfaceSpec d = double_of(lr(1, 1, 1, 0, 1, 1));
        CHECK(d.genus == 2);
        REQUIRE(d.interior_cones.size() == 1);
        CHECK(d.interior_cones[0] == 6 * pi);
        CHECK(std::abs(gauss_bonnet_closed(d)) <= 1e-9);
    }
    SUBCASE("closed input is refused") {
        CHECK_THROWS_AS((void)double_of(spec(2, 0, {4 * pi, 4 * pi})), std::invalid_argument);
    }
}

TEST_CASE("doubling identity: closed residual of the double is twice the bounded residual") {
    Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        SurfaceSpec s;
        s.genus = rng.index(4);
        s.boundary_count = 1 + rng.index(4);
        const int n = rng.index(4), m = rng.index(3);
        for (int i = 0; i < n; ++i) s.interior_cones.push_back(rng.uniform(0.3, 9.0));
        for (int i = 0; i < m; ++i) s.boundary_cones.push_back(rng.uniform(0.3, 2.8));
        const SurfaceSpec d = double_of(s);
        CHECK(d.genus == 2 * s.genus + s.boundary_count - 1);
        CHECK(gauss_bonnet_closed(d) ==
              doctest::Approx(2.0 * gauss_bonnet_bounded(s)).epsilon(1e-12));
    }
}

TEST_CASE("random valid pants double to balanced genus-2 surfaces") {
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const LengthRadiusParams p =
            trial % 5 == 0 ? sample_lr_with_zero(rng, trial % 3) : sample_lr(rng);
        const SurfaceSpec d = double_of(p);
        CHECK(d.genus == 2);
        CHECK(std::abs(gauss_bonnet_closed(d)) <= 1e-9);
    }
}

TEST_CASE("gluing two pants yields genus 2") {
    GluingSpec g;
    g.pants = {lr(1, 1, 1, 1, 1, 1), lr(1, 1, 1, 2, 2, 2)};
    g.pairings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
    const GlueResult out = glue(g);
    CHECK(out.spec.genus == 2);
    CHECK(out.spec.boundary_count == 0);
    REQUIRE(out.spec.interior_cones.size() == 2);
    CHECK(out.spec.interior_cones[0] == 4 * pi);
    CHECK(std::abs(gauss_bonnet_closed(out.spec)) <= 1e-9);
    REQUIRE(out.glued_lengths.size() == 3);
    CHECK(out.glued_lengths[0] == 1.0);
}

TEST_CASE("gluing four pants in a ring yields genus 3") {
    const GlueResult out = glue(ring_of(4));
    CHECK(out.spec.genus == 3);
    CHECK(out.spec.interior_cones.size() == 4);
    CHECK(std::abs(gauss_bonnet_closed(out.spec)) <= 1e-9);
}

TEST_CASE("genus grows as one plus half the pants count") {
    for (int V : {2, 4, 6}) {
        const GlueResult out = glue(ring_of(V));
        CHECK(out.spec.genus == 1 + V / 2);
        CHECK(std::abs(gauss_bonnet_closed(out.spec)) <= 1e-9);
    }
}

TEST_CASE("a pants may glue to itself") {
    GluingSpec g;
    g.pants = {lr(1, 1, 1, 1, 1, 1), lr(1, 1, 1, 1, 1, 1)};
    g.pairings = {{{0, 0}, {0, 1}}, {{0, 2}, {1, 2}}, {{1, 0}, {1, 1}}};
    const GlueResult out = glue(g);
    CHECK(out.spec.genus == 2);
}

TEST_CASE("glue rejects bad specs") {
    SUBCASE("length mismatch names the pairing") {
        GluingSpec g;
        g.pants = {lr(1, 1, 1, 1, 1, 1), lr(2, 1.2, 1.2, 1, 1, 1)};
        g.pairings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("length mismatch in pairing 1"),
                             std::invalid_argument);
    }
    SUBCASE("incomplete matching") {
        GluingSpec g;
        g.pants = {lr(1, 1, 1, 1, 1, 1), lr(1, 1, 1, 1, 1, 1)};
        g.pairings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("matching not perfect"),
                             std::invalid_argument);
    }
    SUBCASE("slot reuse") {
        GluingSpec g;
        g.pants = {lr(1, 1, 1, 1, 1, 1), lr(1, 1, 1, 1, 1, 1)};
        g.pairings = {{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 2}, {1, 2}}};
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("slot used twice"),
                             std::invalid_argument);
    }
    SUBCASE("slot out of range") {
        GluingSpec g;
        g.pants = {lr(1, 1, 1, 1, 1, 1), lr(1, 1, 1, 1, 1, 1)};
        g.pairings = {{{0, 0}, {2, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("slot out of range"),
                             std::invalid_argument);
    }
    SUBCASE("disconnected assembly") {
        GluingSpec g;
        for (int i = 0; i < 4; ++i) g.pants.push_back(lr(1, 1, 1, 1, 1, 1));
        for (int i : {0, 2})
            for (int b = 0; b < 3; ++b) g.pairings.push_back({{i, b}, {i + 1, b}});
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("disconnected"), std::invalid_argument);
    }
    SUBCASE("boundary singularity refused") {
        GluingSpec g;
        g.pants = {lr(1, 1, 1, 0, 1, 1), lr(1, 1, 1, 1, 1, 1)};
        g.pairings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("boundary singularity"),
                             std::invalid_argument);
    }
    SUBCASE("invalid pants refused") {
        GluingSpec g;
        g.pants = {lr(3, 1, 1, 1, 1, 1), lr(1, 1, 1, 1, 1, 1)};
        g.pairings = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}};
        CHECK_THROWS_WITH_AS(glue(g), doctest::Contains("pants 1 invalid"),
                             std::invalid_argument);
    }
    SUBCASE("no pants") {
        CHECK_THROWS_AS((void)glue(GluingSpec{}), std::invalid_argument);
    }
}

TEST_CASE("random ring assemblies always balance") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const int V = 2 * (1 + rng.index(4));
        GluingSpec g = ring_of(V);
        const LengthRadiusParams p = sample_lr(rng);
        for (auto& q : g.pants) q = lr(p.l[0], p.l[0], p.l[0], p.r[0], p.r[1], p.r[2]);
        const GlueResult out = glue(g);
        CHECK(out.spec.genus == V / 2 + 1);
        CHECK(std::abs(gauss_bonnet_closed(out.spec)) <= 1e-9);
    }
}

TEST_CASE("decomposition counting obstruction") {
    SUBCASE("one singularity blocks genus 3 and above") {
        for (int g = 3; g <= 10; ++g) {
            const FeasibilityVerdict v = decomposition_feasible(g, 1);
            CHECK(v.kind == Feasibility::Infeasible);
            CHECK(v.pants_needed == 2 * g - 2);
            CHECK(v.singularity_capacity == 2);
        }
    }
    SUBCASE("genus 2 with one singularity is not ruled out") {
        const FeasibilityVerdict v = decomposition_feasible(2, 1);
        CHECK(v.kind == Feasibility::NotRuledOut);
        CHECK(v.pants_needed == 2);
    }
    SUBCASE("genus 5 with three singularities is infeasible") {
        const FeasibilityVerdict v = decomposition_feasible(5, 3);
        CHECK(v.kind == Feasibility::Infeasible);
        CHECK(v.pants_needed == 8);
        CHECK(v.singularity_capacity == 6);
    }
    SUBCASE("the verdict is exactly the counting inequality") {
        for (int g = 2; g <= 12; ++g)
            for (int n = 1; n <= 12; ++n) {
                const FeasibilityVerdict v = decomposition_feasible(g, n);
                CHECK((v.kind == Feasibility::Infeasible) == (2 * g - 2 > 2 * n));
                CHECK_FALSE(v.reason.empty());
            }
    }
    SUBCASE("domain limits") {
        CHECK_THROWS_AS((void)decomposition_feasible(1, 1), std::invalid_argument);
        CHECK_THROWS_AS((void)decomposition_feasible(2, 0), std::invalid_argument);
    }
}
