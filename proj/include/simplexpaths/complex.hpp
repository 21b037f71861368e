#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simplexpaths/ext_nat.hpp"
#include "simplexpaths/face.hpp"

namespace simplexpaths {

/// A pure simplicial complex stored by its facet set over labeled vertices.
///
/// Invariants enforced at construction:
///   - every facet has exactly d vertices (purity),
///   - the vertex set is the union of the facets,
///   - facets are deduplicated and kept sorted; vertex labels are ordered
///     lexicographically, which is the global tie-break order everywhere.
///
/// The distinguished "empty complex" (single empty facet, d = 0) represents
/// the link of a full facet. A Complex is immutable after construction and
/// safe to share across threads.
class Complex {
  public:
    /// Placeholder value; assign a real complex before use.
    Complex() = default;

    /// Validates and builds a pure complex. Throws EmptyInput or PurityError.
    static Complex from_facets(std::vector<Face> facet_list);

    /// The complex whose only facet is the empty face.
    static Complex empty_complex();

    [[nodiscard]] bool is_empty_complex() const { return facet_size_ == 0; }

    /// Number of vertices per facet (d); dimension is d-1.
    [[nodiscard]] int facet_size() const { return facet_size_; }
    [[nodiscard]] int dimension() const { return facet_size_ - 1; }

    [[nodiscard]] const std::vector<Face>& facets() const { return facets_; }
    [[nodiscard]] const std::vector<VertexLabel>& vertices() const { return vertices_; }

    [[nodiscard]] bool has_vertex(const VertexLabel& v) const;
    /// Index of v in the sorted vertex list. Throws UnknownVertex.
    [[nodiscard]] int vertex_id(const VertexLabel& v) const;

    [[nodiscard]] bool has_face(const Face& f) const;
    [[nodiscard]] bool has_facet(const Face& f) const;
    /// Index of f in the sorted facet list, or -1.
    [[nodiscard]] int facet_index(const Face& f) const;

    /// Neighbors in the 1-skeleton, as sorted labels.
    [[nodiscard]] std::vector<VertexLabel> neighbors(const VertexLabel& v) const;

    /// 1-skeleton adjacency over vertex ids.
    [[nodiscard]] const std::vector<std::vector<int>>& skeleton_adjacency() const {
        return adjacency_;
    }

    /// Dual-graph adjacency over facet indices (facets differing in one vertex).
    [[nodiscard]] const std::vector<std::vector<int>>& dual_adjacency() const {
        return dual_adjacency_;
    }

    /// BFS distance between vertex ids in the 1-skeleton (no conventions applied).
    [[nodiscard]] ExtNat skeleton_distance(int u, int v) const;

    /// All faces of the complex, including the empty face, sorted.
    [[nodiscard]] std::vector<Face> all_faces() const;

    /// Canonical key: facets joined with ';', labels inside joined with ' '.
    [[nodiscard]] std::string canonical_key() const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.facets_ == b.facets_;
    }

  private:
    int facet_size_ = 0;
    std::vector<Face> facets_;              // sorted
    std::vector<VertexLabel> vertices_;     // sorted
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> dual_adjacency_;
    std::vector<std::vector<int>> vertex_facets_;  // facets containing each vertex
    std::vector<int> skeleton_dist_;               // n*n, -1 encodes infinity

    void build_structures();
};

/// lk_C(f): faces f' with f disjoint from f' and their union a face.
/// For |f| = d this is the empty complex. Throws NotAFace.
Complex link(const Complex& C, const Face& f);

/// st_C(f): the subcomplex generated by the facets containing f. Throws NotAFace.
Complex star(const Complex& C, const Face& f);

/// del_C(f): faces not containing f. Throws NotAFace; throws PurityError when
/// the deletion is not pure of the same dimension (callers that only need the
/// shedding test should use deletion_facets).
Complex deletion(const Complex& C, const Face& f);

/// Facets of del_C(f) (maximal faces not containing f); may have mixed sizes.
std::vector<Face> deletion_facets(const Complex& C, const Face& f);

/// vdist_C(S,T): minimum 1-skeleton distance over pairs, with the conventions
/// that an empty side gives infinity and that in dimension 0 two nonempty sets
/// are at distance 0 if they meet and 1 otherwise. Throws UnknownVertex.
ExtNat vertex_distance(const Complex& C, const VertexSet& S, const VertexSet& T);

/// Convenience form for a single source vertex.
ExtNat vertex_distance(const Complex& C, const VertexLabel& v, const VertexSet& T);

/// True iff the dual graph of every nonempty face's star is connected.
bool is_normal(const Complex& C);

/// Flag plus the boundary (codimension-one faces lying in exactly one facet).
std::pair<bool, std::vector<Face>> is_pseudomanifold(const Complex& C);

/// All vertex sets that are not faces but whose proper nonempty subsets all are.
std::vector<Face> minimal_nonfaces(const Complex& C);

/// True iff every minimal nonface has exactly 2 vertices.
bool is_flag(const Complex& C);

/// Minimal k in {2,...,d+1} such that every critical clique of size >= k+1 is
/// a face. A critical clique is a clique T of the 1-skeleton with some v in T
/// such that T minus v is a face. Requires dimension >= 1.
int bannerness(const Complex& C);

/// Recursive vertex-decomposability check with memoization on canonical keys.
bool is_vertex_decomposable(const Complex& C);

/// Maximum eccentricity of the dual graph; infinity when disconnected.
ExtNat dual_diameter(const Complex& C);

}  // namespace simplexpaths
