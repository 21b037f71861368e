#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "simplexpaths/complex.hpp"
#include "simplexpaths/face.hpp"

namespace simplexpaths {

/// A complex with two marked facets and marked vertices inside them, carrying
/// the claimed minimum length of monotone conservative paths between them.
struct MarkedComplex {
    Complex complex;
    Face F1;
    Face F2;
    VertexLabel x1;
    VertexLabel x2;
    std::uint64_t claimed_min_length = 0;
};

/// A worked-example complex with the named facets, orderings and target set
/// used in the tests.
struct Fixture {
    Complex complex;
    std::map<std::string, Face> named_facets;
    std::map<std::string, OrderedFacet> named_orderings;
    VertexSet target;
};

/// fig2: a triangulated strip of ten triangles. fig3: the flag 2-complex with
/// hexagonal link used for the step-verdict table. fan3: three edges sharing a
/// vertex. Throws UnknownFixture.
Fixture fixture(const std::string& name);

/// The exponential-path ball: starting from a path complex with N+4 vertices,
/// repeatedly one-point-suspends at x1 and glues two stacks along the far
/// facet of the previous stage. The output has N + d^2 vertices and x_i lies
/// in exactly one facet. Requires d >= 2, N >= 4.
MarkedComplex exponential_ball(int d, int N);

/// The boundaryless variant: starting from a cycle with N vertices, one-point
/// suspension followed by stellar subdivisions of the edges at the suspension
/// vertices. The output has N + sum(4k+1, k=2..d-1) vertices, is a
/// pseudomanifold without boundary, and stays vertex-decomposable.
/// Requires d >= 2, N >= 7.
MarkedComplex hirsch_sphere(int d, int N);

}  // namespace simplexpaths
