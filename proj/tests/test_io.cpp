#include <doctest.h>

#include <sstream>

#include "simplexpaths/errors.hpp"
#include "simplexpaths/generators.hpp"
#include "simplexpaths/io.hpp"

using namespace simplexpaths;

TEST_SUITE("io") {

TEST_CASE("facet list parsing skips comments and blank lines") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "a1 a2 a3\n"
        "a2 a3 a4   # trailing comment\n");
    Complex c = parse_facet_list(in);
    CHECK(c.facets().size() == 2);
    CHECK(c.vertices().size() == 4);
}

TEST_CASE("parse errors") {
    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(parse_facet_list(empty), ParseError);

    std::istringstream impure("a b\nc d e\n");
    CHECK_THROWS_AS(parse_facet_list(impure), PurityError);
}

TEST_CASE("canonical emission round-trips byte for byte") {
    for (const auto& name : {"fig2", "fig3", "fan3"}) {
        Complex c = fixture(name).complex;
        const std::string once = emit_canonical(c);
        std::istringstream in(once);
        const std::string twice = emit_canonical(parse_facet_list(in));
        CHECK(once == twice);
    }
}

TEST_CASE("set and ordered-facet text forms") {
    CHECK(set_to_string(make_face({"b", "a"})) == "{a,b}");
    CHECK(parse_set("{a1, a2 ,a3}") == make_face({"a1", "a2", "a3"}));
    CHECK(parse_set("{x}") == make_face({"x"}));
    CHECK_THROWS_AS(parse_set("a b"), ParseError);
    CHECK_THROWS_AS(parse_set("{}"), ParseError);

    CHECK(ordered_to_string(OrderedFacet{"a1", "a4", "a2"}) == "(a1 a4 a2)");
    CHECK(parse_ordered("(a1 a4 a2)") == OrderedFacet{"a1", "a4", "a2"});
    CHECK_THROWS_AS(parse_ordered("(a a)"), ParseError);
}

TEST_CASE("marked sidecar lists the markings") {
    auto mc = exponential_ball(2, 4);
    const std::string js = marked_sidecar_json(mc, "ball", "d=2,N=4");
    CHECK(js.find("\"kind\": \"ball\"") != std::string::npos);
    CHECK(js.find("\"x1\": \"p00\"") != std::string::npos);
    CHECK(js.find("\"claimed_min_length\": 7") != std::string::npos);
}

}  // TEST_SUITE
