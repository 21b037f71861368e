#include <doctest.h>

#include "simplexpaths/bounds.hpp"
#include "simplexpaths/constructions.hpp"
#include "simplexpaths/generators.hpp"
#include "testutil.hpp"

using namespace simplexpaths;

namespace {

const BoundEntry& bound_named(const BoundReport& rep, const std::string& name) {
    for (const auto& b : rep.bounds)
        if (b.name == name) return b;
    REQUIRE(false);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("bounds-verify") {

TEST_CASE("audit of the flag fixture stays within the Hirsch bound") {
    Fixture f3 = fixture("fig3");
    BoundReport rep = audit(f3.complex);
    CHECK(rep.normal);
    CHECK(rep.flag);
    CHECK(rep.banner_k == 2);
    CHECK_FALSE(rep.partial);
    const auto& hirsch = bound_named(rep, "hirsch");
    CHECK(hirsch.applies);
    CHECK(hirsch.value == 5);  // n - d = 8 - 3
    CHECK(rep.observed_max_path <= 5);
    CHECK(hirsch.satisfied);
    CHECK(rep.violations.empty());
}

TEST_CASE("audit of a single simplex") {
    BoundReport rep = audit(Complex::from_facets({make_face({"1", "2", "3"})}));
    CHECK(rep.observed_max_path == 0);
    for (const auto& b : rep.bounds) CHECK(b.satisfied);
}

TEST_CASE("audit of the exponential ball sits between the construction floor and Larman") {
    auto b3 = exponential_ball(3, 4);
    BoundReport rep = audit(b3.complex);
    CHECK(rep.observed_max_path >= 14);
    const auto& larman = bound_named(rep, "larman");
    CHECK(larman.value == 26);  // 13 * 2^(3-2)
    CHECK(larman.satisfied);
    CHECK(rep.violations.empty());
    CHECK(rep.diameter <= ExtNat::finite(rep.observed_max_path));
}

TEST_CASE("boundaryless pseudomanifolds get the halved bound") {
    BoundReport rep = audit(sptest::cycle_complex(8));
    CHECK(rep.pseudomanifold);
    CHECK(rep.boundaryless);
    const auto& pm = bound_named(rep, "pseudomanifold");
    CHECK(pm.applies);
    CHECK(pm.value == 4);  // floor(n / 2)
    CHECK(pm.satisfied);
}

TEST_CASE("banner bound check") {
    CHECK(banner_bound_check(fixture("fig2").complex));
    CHECK(banner_bound_check(fixture("fig3").complex));

    // triangulated annulus between two hollow triangles: the inner and outer
    // triangles are critical nonface cliques, no 4-clique exists, so the
    // complex is 3-banner but not flag
    Complex annulus = Complex::from_facets(
        {make_face({"1", "2", "o1"}), make_face({"2", "o1", "o2"}),
         make_face({"2", "3", "o2"}), make_face({"3", "o2", "o3"}),
         make_face({"1", "3", "o3"}), make_face({"1", "o3", "o1"})});
    CHECK(bannerness(annulus) == 3);
    CHECK(is_normal(annulus));
    BoundReport rep = audit(annulus);
    const auto& banner = bound_named(rep, "banner");
    CHECK(banner.value == 12);  // 6 * 2^(3-2)
    CHECK(banner.satisfied);
}

TEST_CASE("non-normal input reports flags only") {
    Complex pinch =
        Complex::from_facets({make_face({"1", "2", "3"}), make_face({"1", "4", "5"})});
    BoundReport rep = audit(pinch);
    CHECK_FALSE(rep.normal);
    CHECK(rep.bounds.empty());
    CHECK(rep.observed_max_path == 0);
}

TEST_CASE("parallel audit matches the sequential one") {
    Fixture f2 = fixture("fig2");
    BoundReport seq = audit(f2.complex, kDefaultCap, 1);
    BoundReport par = audit(f2.complex, kDefaultCap, 4);
    CHECK(seq.to_json() == par.to_json());
}

TEST_CASE("report JSON is stable") {
    BoundReport rep = audit(fixture("fan3").complex);
    const std::string js = rep.to_json();
    CHECK(js.find("\"n\": 4") != std::string::npos);
    CHECK(js.find("\"observed_max_path\"") != std::string::npos);
    CHECK(js == audit(fixture("fan3").complex).to_json());
}

}  // TEST_SUITE
