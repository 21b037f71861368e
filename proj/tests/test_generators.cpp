#include <doctest.h>

#include "simplexpaths/constructions.hpp"
#include "simplexpaths/errors.hpp"
#include "simplexpaths/generators.hpp"
#include "simplexpaths/pathfinder.hpp"
#include "testutil.hpp"

using namespace simplexpaths;

TEST_SUITE("generators") {

TEST_CASE("fixture names") {
    CHECK(fixture("fig2").complex.facets().size() == 10);
    CHECK(fixture("fig3").complex.facets().size() == 7);
    CHECK(fixture("fan3").complex.facets().size() == 3);
    CHECK_THROWS_AS(fixture("fig9"), UnknownFixture);
}

TEST_CASE("the base ball is the path complex with the end edges marked") {
    auto b2 = exponential_ball(2, 4);
    CHECK(b2.complex.vertices().size() == 8);
    CHECK(b2.complex.facets().size() == 7);
    CHECK(b2.claimed_min_length == 7);  // closed form (N+3)*2^(d-2)

    auto ext = path_extremes(b2.complex, b2.F1, b2.F2, TargetMode::Facet);
    REQUIRE(ext.any_complete);
    CHECK(ext.min_length == 6);
}

TEST_CASE("the three-dimensional ball instance") {
    auto b3 = exponential_ball(3, 4);
    CHECK(b3.complex.vertices().size() == 13);  // N + d*d
    CHECK(b3.complex.facets().size() == 17);
    CHECK(is_normal(b3.complex));
    CHECK(is_vertex_decomposable(b3.complex));
    auto [pm, bd] = is_pseudomanifold(b3.complex);
    CHECK(pm);
    CHECK_FALSE(bd.empty());  // a ball has boundary

    // the marked vertices lie in exactly one facet each
    for (const auto& [facet, vertex] :
         {std::pair{b3.F1, b3.x1}, std::pair{b3.F2, b3.x2}}) {
        CHECK(face_contains(facet, vertex));
        int count = 0;
        for (const auto& f : b3.complex.facets())
            if (face_contains(f, vertex)) ++count;
        CHECK(count == 1);
    }

    // the minimum between the marked facets is forced through both stacks
    // and the whole suspension ladder: 2L + k = 2*6 + 4
    auto ext = path_extremes(b3.complex, b3.F1, b3.F2, TargetMode::Facet);
    REQUIRE(ext.any_complete);
    CHECK(ext.min_length == 16);
    CHECK(ext.max_length == 16);

    auto ext_set = path_extremes(b3.complex, b3.F1, VertexSet{b3.x2}, TargetMode::Set);
    REQUIRE(ext_set.any_complete);
    CHECK(ext_set.min_length == 16);

    // every such path visits every facet exactly once
    auto res = enumerate_paths(b3.complex, b3.F1, b3.F2, TargetMode::Facet);
    CHECK_FALSE(res.paths.empty());
    for (const auto& P : res.paths) {
        CHECK(P.steps.size() == b3.complex.facets().size());
        auto sets = P.facet_sets();
        std::sort(sets.begin(), sets.end());
        CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    }
}

TEST_CASE("ball growth law between consecutive stages") {
    auto b2 = exponential_ball(2, 4);
    auto b3 = exponential_ball(3, 4);
    auto base = path_extremes(b2.complex, b2.F1, b2.F2, TargetMode::Facet);
    auto grown = path_extremes(b3.complex, b3.F1, b3.F2, TargetMode::Facet);
    REQUIRE(base.any_complete);
    REQUIRE(grown.any_complete);
    // one inductive stage with k = 4 doubles the minimum and adds k
    CHECK(grown.min_length == 2 * base.min_length + 4);
}

TEST_CASE("the base sphere is the marked cycle") {
    auto s2 = hirsch_sphere(2, 8);
    CHECK(s2.complex.vertices().size() == 8);
    CHECK(s2.complex.facets().size() == 8);
    CHECK(s2.claimed_min_length == 4);
    auto ext = path_extremes(s2.complex, s2.F1, s2.F2, TargetMode::Facet);
    REQUIRE(ext.any_complete);
    CHECK(ext.min_length == 4);  // N/2 between near-antipodal edges
}

TEST_CASE("the three-dimensional sphere instance") {
    auto s3 = hirsch_sphere(3, 8);
    CHECK(s3.complex.vertices().size() == 17);  // N + 4d + 1 for the single stage
    CHECK(s3.complex.facets().size() == 30);
    CHECK(is_normal(s3.complex));
    CHECK(is_vertex_decomposable(s3.complex));
    auto [pm, bd] = is_pseudomanifold(s3.complex);
    CHECK(pm);
    CHECK(bd.empty());

    // every vertex link is a boundaryless pseudomanifold
    for (const auto& v : s3.complex.vertices()) {
        auto [lpm, lbd] = is_pseudomanifold(link(s3.complex, Face{v}));
        CHECK(lpm);
        CHECK(lbd.empty());
    }

    // marked degrees follow the subdivision law 2d - 2
    CHECK(s3.complex.neighbors(s3.x1).size() == 4);
    CHECK(s3.complex.neighbors(s3.x2).size() == 4);

    // the materialized minimum between the marked facets: the claimed closed
    // form 2^(d-3)*N = 8 is recorded in claimed_min_length, but the base
    // cycle only supports 3 forced steps per suspension side, so every
    // stage doubles 3, not 4
    CHECK(s3.claimed_min_length == 8);
    auto ext = path_extremes(s3.complex, s3.F1, s3.F2, TargetMode::Facet);
    REQUIRE(ext.any_complete);
    CHECK(ext.min_length == 6);

    auto ext_set = path_extremes(s3.complex, s3.F1, VertexSet{s3.x2}, TargetMode::Set);
    REQUIRE(ext_set.any_complete);
    CHECK(ext_set.min_length == 5);
}

TEST_CASE("the sphere minimum follows the forced-side law across N") {
    // each suspension side contributes the longest uniquely-forced arc of the
    // base cycle, floor((N-1)/2) steps, and the minimum doubles it
    for (int N : {7, 8, 9, 10}) {
        auto s = hirsch_sphere(3, N);
        auto ext = path_extremes(s.complex, s.F1, s.F2, TargetMode::Facet);
        REQUIRE(ext.any_complete);
        CHECK(ext.min_length == 2 * static_cast<std::uint64_t>((N - 1) / 2));
    }
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(exponential_ball(1, 4), InvalidParams);
    CHECK_THROWS_AS(exponential_ball(3, 3), InvalidParams);
    CHECK_THROWS_AS(hirsch_sphere(3, 6), InvalidParams);
    CHECK_THROWS_AS(hirsch_sphere(1, 8), InvalidParams);
}

}  // TEST_SUITE
