#include <doctest.h>

#include <algorithm>
#include <random>

#include "simplexpaths/errors.hpp"
#include "simplexpaths/generators.hpp"
#include "simplexpaths/ordering.hpp"
#include "testutil.hpp"

using namespace simplexpaths;

namespace {

std::vector<OrderedFacet> all_permutations(const Face& f) {
    OrderedFacet p = f;
    std::vector<OrderedFacet> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

TEST_SUITE("ordering") {

TEST_CASE("reduce_target") {
    Fixture f3 = fixture("fig3");
    CHECK(reduce_target(f3.complex, "a1", f3.target) == make_face({"a6", "a7"}));

    Fixture f2 = fixture("fig2");
    CHECK(reduce_target(f2.complex, "c1", f2.target) == make_face({"c2"}));

    Fixture fan = fixture("fan3");
    CHECK(reduce_target(fan.complex, "1", make_face({"1"})).empty());

    CHECK_THROWS_AS(reduce_target(fan.complex, "9", fan.target), UnknownVertex);
}

TEST_CASE("distance vectors of the strip fixture") {
    Fixture f2 = fixture("fig2");
    CHECK(distance_vector(f2.complex, f2.named_orderings.at("F1"), f2.target).to_string() ==
          "(5,0,0)");
    CHECK(distance_vector(f2.complex, f2.named_orderings.at("F2"), f2.target).to_string() ==
          "(2,1,1)");
    CHECK(distance_vector(f2.complex, f2.named_orderings.at("F3"), f2.target).to_string() ==
          "(0,0,inf)");
}

TEST_CASE("distance vector of F in fig3") {
    Fixture f3 = fixture("fig3");
    CHECK(distance_vector(f3.complex, f3.named_orderings.at("F"), f3.target).to_string() ==
          "(2,2,1)");
    for (const auto& name : {"G1", "G2", "H1", "H2"})
        CHECK(distance_vector(f3.complex, f3.named_orderings.at(name), f3.target).to_string() ==
              "(2,1,1)");
}

TEST_CASE("recursive evaluation agrees with the fresh-link oracle") {
    std::vector<Complex> corpus = sptest::corpus_normal(40, 5550);
    std::mt19937_64 rng(99);
    for (const auto& c : corpus) {
        for (int trial = 0; trial < 4; ++trial) {
            const Face& f = c.facets()[rng() % c.facets().size()];
            const Face& t = c.facets()[rng() % c.facets().size()];
            for (const auto& of : all_permutations(f)) {
                CHECK(distance_vector(c, of, t) == sptest::distance_vector_oracle(c, of, t));
            }
        }
    }
}

TEST_CASE("admissibility verdicts of the fixtures") {
    Fixture f2 = fixture("fig2");
    CHECK_FALSE(is_admissible(f2.complex, f2.named_orderings.at("F1"), f2.target));
    CHECK(is_admissible(f2.complex, f2.named_orderings.at("F2"), f2.target));
    CHECK(is_admissible(f2.complex, f2.named_orderings.at("F3"), f2.target));
    CHECK(is_admissible(f2.complex, OrderedFacet{"a2", "a3", "a1"}, f2.target));

    Fixture f3 = fixture("fig3");
    CHECK(is_admissible(f3.complex, OrderedFacet{"a1", "a4", "a2"}, f3.target));
    CHECK(is_admissible(f3.complex, f3.named_orderings.at("F"), f3.target));
}

TEST_CASE("admissible_orderings matches the brute-force filter") {
    Fixture f2 = fixture("fig2");
    auto got = admissible_orderings(f2.complex, f2.named_facets.at("F2"), f2.target);
    CHECK(std::find(got.begin(), got.end(), f2.named_orderings.at("F2")) != got.end());

    // d = 1: the only ordering
    Complex dim0 = Complex::from_facets({make_face({"x"}), make_face({"y"})});
    CHECK(admissible_orderings(dim0, make_face({"x"}), make_face({"y"})) ==
          std::vector<OrderedFacet>{OrderedFacet{"x"}});

    // exhaustive comparison on random complexes
    std::vector<Complex> corpus = sptest::corpus_normal(25, 8200);
    std::mt19937_64 rng(7);
    for (const auto& c : corpus) {
        const Face& f = c.facets()[rng() % c.facets().size()];
        const Face& t = c.facets()[rng() % c.facets().size()];
        auto fast = admissible_orderings(c, f, t);
        std::vector<OrderedFacet> brute;
        for (const auto& of : all_permutations(f))
            if (is_admissible(c, of, t)) brute.push_back(of);
        CHECK(fast == brute);
    }
}

TEST_CASE("consistency between is_admissible and admissible_orderings") {
    Fixture f3 = fixture("fig3");
    const Face F = f3.named_facets.at("F");
    auto adm = admissible_orderings(f3.complex, F, f3.target);
    for (const auto& of : all_permutations(F)) {
        const bool member = std::find(adm.begin(), adm.end(), of) != adm.end();
        CHECK(is_admissible(f3.complex, of, f3.target) == member);
    }
}

TEST_CASE("max_index_reorder") {
    Fixture f3 = fixture("fig3");
    const OrderedFacet F = f3.named_orderings.at("F");

    auto h = max_index_reorder(f3.complex, f3.named_facets.at("H"), f3.target, F);
    CHECK(h == std::vector<OrderedFacet>{OrderedFacet{"a1", "a4", "a2"}});

    auto g = max_index_reorder(f3.complex, f3.named_facets.at("G"), f3.target, F);
    CHECK(g == std::vector<OrderedFacet>{OrderedFacet{"a1", "a5", "a3"}});

    Complex dim0 = Complex::from_facets({make_face({"x"}), make_face({"y"})});
    CHECK(max_index_reorder(dim0, make_face({"y"}), make_face({"y"}), OrderedFacet{"x"}) ==
          std::vector<OrderedFacet>{OrderedFacet{"y"}});
}

TEST_CASE("step_index terminates the prefix at a missing vertex") {
    CHECK(step_index(OrderedFacet{"a", "b", "c"}, OrderedFacet{"a", "b", "d"}) == 2);
    CHECK(step_index(OrderedFacet{"a", "b", "c"}, OrderedFacet{"x", "b", "c"}) == 0);
    CHECK(step_index(OrderedFacet{"a", "b", "c"}, OrderedFacet{"a", "b", "c"}) == 3);
}

TEST_CASE("finite entries for admissible orderings under the stated hypotheses") {
    std::vector<Complex> corpus = sptest::corpus_normal(40, 9100);
    std::mt19937_64 rng(13);
    for (const auto& c : corpus) {
        const Face& f = c.facets()[rng() % c.facets().size()];
        const Face& t = c.facets()[rng() % c.facets().size()];
        const bool disjoint = face_intersection(f, t).empty();
        const bool face_not_strictly_inside = !(is_subset(t, f) && t.size() < f.size());
        if (!disjoint && !face_not_strictly_inside) continue;
        for (const auto& of : admissible_orderings(c, f, t))
            for (const auto& e : distance_vector(c, of, t).entries()) CHECK(e.is_finite());
    }
}

TEST_CASE("zeros form a prefix and the first entry realizes the facet distance") {
    std::vector<Complex> corpus = sptest::corpus_normal(30, 10400);
    std::mt19937_64 rng(17);
    for (const auto& c : corpus) {
        const Face& f = c.facets()[rng() % c.facets().size()];
        const Face& t = c.facets()[rng() % c.facets().size()];
        for (const auto& of : admissible_orderings(c, f, t)) {
            auto lam = distance_vector(c, of, t).entries();
            CHECK(lam.front() == vertex_distance(c, f, t));
            bool past_zeros = false;
            for (const auto& e : lam) {
                if (e != ExtNat::finite(0)) past_zeros = true;
                if (past_zeros) CHECK(e != ExtNat::finite(0));
            }
        }
    }
}

TEST_CASE("errors") {
    Fixture f3 = fixture("fig3");
    CHECK_THROWS_AS(distance_vector(f3.complex, OrderedFacet{"a1", "a2", "a8"}, f3.target),
                    NotAFacet);
    CHECK_THROWS_AS(admissible_orderings(f3.complex, make_face({"a1", "a8"}), f3.target),
                    NotAFacet);
}

}  // TEST_SUITE
