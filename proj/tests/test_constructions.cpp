#include <doctest.h>

#include <map>

#include "simplexpaths/constructions.hpp"
#include "simplexpaths/errors.hpp"
#include "simplexpaths/generators.hpp"
#include "testutil.hpp"

using namespace simplexpaths;

namespace {

Complex relabeled(const Complex& C, const std::map<VertexLabel, VertexLabel>& map) {
    std::vector<Face> facets;
    for (const auto& f : C.facets()) {
        Face g;
        for (const auto& v : f) {
            auto it = map.find(v);
            g.push_back(it == map.end() ? v : it->second);
        }
        facets.push_back(make_face(std::move(g)));
    }
    return Complex::from_facets(std::move(facets));
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("join") {
    Complex tri = Complex::from_facets({make_face({"1", "2", "3"})});
    Complex pt = Complex::from_facets({make_face({"v"})});
    Complex cone = join(tri, pt);
    CHECK(cone.facets() == std::vector<Face>{make_face({"1", "2", "3", "v"})});

    Complex e1 = Complex::from_facets({make_face({"a", "b"})});
    Complex e2 = Complex::from_facets({make_face({"c", "d"})});
    CHECK(join(e1, e2).facets() == std::vector<Face>{make_face({"a", "b", "c", "d"})});

    // suspension doubles the facet count
    Fixture fan = fixture("fan3");
    auto susp = suspension(fan.complex);
    CHECK(susp.complex.facets().size() == 2 * fan.complex.facets().size());
    CHECK(susp.complex.dimension() == fan.complex.dimension() + 1);

    // dimension additivity and associativity up to nothing (labels disjoint)
    Complex p3 = sptest::path_complex(3);
    CHECK(join(e1, p3).dimension() == e1.dimension() + p3.dimension() + 1);
    Complex left = join(join(e1, e2), tri);
    Complex right = join(e1, join(e2, tri));
    CHECK(left.canonical_key() == right.canonical_key());

    // label collision is repaired by relabeling
    Complex clash = join(e1, Complex::from_facets({make_face({"a", "z"})}));
    CHECK(clash.facets().size() == 1);
    CHECK(clash.facets().front().size() == 4);
}

TEST_CASE("one-point suspension") {
    Complex point = Complex::from_facets({make_face({"a"})});
    auto ops = one_point_suspension(point, "a");
    CHECK(ops.complex.facets() == std::vector<Face>{make_face({ops.v1, ops.v2})});

    Fixture fan = fixture("fan3");
    auto fan_ops = one_point_suspension(fan.complex, "1");
    CHECK(fan_ops.complex.vertices().size() == fan.complex.vertices().size() + 1);
    CHECK(fan_ops.complex.dimension() == fan.complex.dimension() + 1);

    CHECK_THROWS_AS(one_point_suspension(fan.complex, "nope"), UnknownVertex);
}

TEST_CASE("one-point suspension link identities") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Complex c = sptest::random_normal_complex(60000 + seed);
        const VertexLabel v = c.vertices()[seed % c.vertices().size()];
        auto ops = one_point_suspension(c, v);

        // lk(v1) and lk(v2) are copies of C with the other suspension vertex
        // standing in for v
        Complex lk1 = link(ops.complex, Face{ops.v1});
        CHECK(relabeled(lk1, {{ops.v2, v}}).canonical_key() == c.canonical_key());
        Complex lk2 = link(ops.complex, Face{ops.v2});
        CHECK(relabeled(lk2, {{ops.v1, v}}).canonical_key() == c.canonical_key());

        // lk of the suspension edge is the original link
        Complex lk_edge = link(ops.complex, make_face(Face{ops.v1, ops.v2}));
        CHECK(lk_edge.canonical_key() == link(c, Face{v}).canonical_key());
    }
}

TEST_CASE("one-point suspension preserves vertex decomposability both ways") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Complex c = sptest::random_normal_complex(61000 + seed, 8, 6);
        const VertexLabel v = c.vertices().front();
        auto ops = one_point_suspension(c, v);
        CHECK(is_vertex_decomposable(c) == is_vertex_decomposable(ops.complex));
    }
}

TEST_CASE("stellar subdivision") {
    Complex tri = Complex::from_facets({make_face({"1", "2", "3"})});
    auto sub = stellar_subdivision(tri, make_face({"1", "2", "3"}));
    CHECK(sub.complex.facets() ==
          std::vector<Face>{make_face({"1", "2", sub.new_vertex}),
                            make_face({"1", "3", sub.new_vertex}),
                            make_face({"2", "3", sub.new_vertex})});

    Complex hollow = Complex::from_facets(
        {make_face({"1", "2"}), make_face({"2", "3"}), make_face({"1", "3"})});
    auto esub = stellar_subdivision(hollow, make_face({"1", "2"}));
    CHECK(esub.complex.facets().size() == 4);
    CHECK(esub.complex.has_facet(make_face({"1", esub.new_vertex})));
    CHECK(esub.complex.has_facet(make_face({"2", esub.new_vertex})));
    CHECK(esub.complex.has_facet(make_face({"2", "3"})));
    CHECK_FALSE(esub.complex.has_face(make_face({"1", "2"})));

    CHECK_THROWS_AS(stellar_subdivision(tri, make_face({"9"})), NotAFace);
}

TEST_CASE("stellar subdivision preserves vertex decomposability") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Complex c = sptest::random_normal_complex(62000 + seed, 8, 6);
        if (!is_vertex_decomposable(c)) continue;
        for (const auto& f : c.all_faces()) {
            if (f.empty()) continue;
            auto sub = stellar_subdivision(c, f);
            CHECK(is_vertex_decomposable(sub.complex));
        }
    }
}

TEST_CASE("subdividing all edges at a vertex") {
    Complex hollow = Complex::from_facets(
        {make_face({"1", "2"}), make_face({"2", "3"}), make_face({"1", "3"})});
    Complex penta = subdivide_all_edges_at(hollow, "1");
    CHECK(penta.vertices().size() == 5);
    CHECK(penta.facets().size() == 5);
    CHECK(vertex_distance(penta, "1", VertexSet{"2"}) == ExtNat::finite(2));
    auto [pm, bd] = is_pseudomanifold(penta);
    CHECK(pm);
    CHECK(bd.empty());

    // degree of the center is unchanged
    Fixture f3 = fixture("fig3");
    const auto degree_before = f3.complex.neighbors("a1").size();
    Complex after = subdivide_all_edges_at(f3.complex, "a1");
    CHECK(after.neighbors("a1").size() == degree_before);
}

TEST_CASE("a single edge subdivision gives the new vertex degree 2 plus its link") {
    Fixture f3 = fixture("fig3");
    for (const auto& b : f3.complex.neighbors("a1")) {
        const Face edge = make_face(Face{"a1", b});
        auto sub = stellar_subdivision(f3.complex, edge);
        const auto link_size = link(f3.complex, edge).vertices().size();
        CHECK(sub.complex.neighbors(sub.new_vertex).size() == 2 + link_size);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Complex c = sptest::random_normal_complex(63000 + seed);
        if (c.dimension() < 1) continue;
        for (const auto& f : c.all_faces()) {
            if (f.size() != 2) continue;
            auto sub = stellar_subdivision(c, f);
            CHECK(sub.complex.neighbors(sub.new_vertex).size() ==
                  2 + link(c, f).vertices().size());
        }
    }
}

TEST_CASE("stack complexes") {
    auto s53 = stack_complex(5, 3);
    CHECK(s53.complex.vertices().size() == 8);
    CHECK(s53.complex.facets().size() == 5);
    CHECK(dual_diameter(s53.complex) == ExtNat::finite(4));

    auto s12 = stack_complex(1, 2);
    CHECK(s12.complex.facets().size() == 1);
    CHECK(s12.complex.facets().front().size() == 3);

    auto s33 = stack_complex(3, 3);
    CHECK(face_intersection(s33.glue_face, s33.far_facet) == Face{s33.apex});

    CHECK_THROWS_AS(stack_complex(0, 3), InvalidParams);
    CHECK_THROWS_AS(stack_complex(3, 1), InvalidParams);
}

TEST_CASE("fresh labels avoid the given complexes") {
    Complex c = Complex::from_facets({make_face({"w0", "w1"})});
    FreshLabelSource src;
    CHECK(src.next({&c}) == "w2");
    CHECK(src.next({&c}) == "w3");
}

}  // TEST_SUITE
