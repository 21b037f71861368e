#pragma once

#include <string>
#include <vector>

#include "simplexpaths/complex.hpp"

namespace simplexpaths {

/// Deterministic source of vertex labels guaranteed not to collide with the
/// complexes passed to next().
class FreshLabelSource {
  public:
    explicit FreshLabelSource(std::string prefix = "w") : prefix_(std::move(prefix)) {}

    VertexLabel next(std::initializer_list<const Complex*> used);

  private:
    std::string prefix_;
    unsigned counter_ = 0;
};

/// C1 * C2: facets are unions of one facet from each side. Colliding labels in
/// C2 are renamed through a FreshLabelSource first.
Complex join(const Complex& C1, const Complex& C2);

struct SuspensionResult {
    Complex complex;
    VertexLabel v1;
    VertexLabel v2;
};

/// Join with two fresh singletons.
SuspensionResult suspension(const Complex& C);

/// One-point suspension at v: v is replaced by the edge {v1, v2}; dimension
/// grows by one and the vertex count by exactly one. Throws UnknownVertex.
SuspensionResult one_point_suspension(const Complex& C, const VertexLabel& v);

struct SubdivisionResult {
    Complex complex;
    VertexLabel new_vertex;
};

/// Stellar subdivision of the face f: facets containing f are replaced by the
/// cones over a fresh vertex. Throws NotAFace.
SubdivisionResult stellar_subdivision(const Complex& C, const Face& f);

/// Stellar-subdivides every original edge at a, in lexicographic neighbor
/// order; afterwards every other vertex is one step farther from a.
Complex subdivide_all_edges_at(const Complex& C, const VertexLabel& a);

struct StackComplex {
    Complex complex;
    VertexLabel apex;        // the vertex u common to all facets
    Face glue_face;          // {u, v_1, ..., v_{d-1}}
    Face far_facet;          // {u, v_l, ..., v_{l+d-1}}
    VertexLabel far_vertex;  // v_{l+d-1}, contained only in far_facet
};

/// The stack complex: l facets {u, v_i, ..., v_{i+d-1}} on l+d vertices whose
/// dual graph is a path. Requires l >= 1 and d >= 2.
StackComplex stack_complex(int l, int d);

}  // namespace simplexpaths
