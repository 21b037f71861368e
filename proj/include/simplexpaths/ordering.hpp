#pragma once

#include <string>
#include <vector>

#include "simplexpaths/complex.hpp"
#include "simplexpaths/ext_nat.hpp"
#include "simplexpaths/face.hpp"

namespace simplexpaths {

/// The vector of distances from an ordered facet to a target set: entry i is
/// the vertex-distance of the i-th vertex to the current target, computed in
/// the link of the previous vertices with the target reduced at each level.
class DistanceVector {
  public:
    DistanceVector() = default;
    explicit DistanceVector(std::vector<ExtNat> entries) : entries_(std::move(entries)) {}

    [[nodiscard]] const std::vector<ExtNat>& entries() const { return entries_; }

    /// Lexicographic order; infinity is larger than every finite value and
    /// equal to itself.
    friend bool operator<(const DistanceVector& a, const DistanceVector& b) {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }
    friend bool operator==(const DistanceVector& a, const DistanceVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const DistanceVector& a, const DistanceVector& b) {
        return !(a == b);
    }

    /// "(2,1,inf)"
    [[nodiscard]] std::string to_string() const;

  private:
    std::vector<ExtNat> entries_;
};

/// The reduced target seen from the link of v1: if v1 is not in S, the
/// neighbors of v1 one step closer to S than v1; if v1 is in S, the part of S
/// adjacent to v1. May be empty. Throws UnknownVertex.
VertexSet reduce_target(const Complex& C, const VertexLabel& v1, const VertexSet& S);

/// Recursive evaluation of the vector of distances. When the reduced target
/// becomes empty all deeper entries are infinite. Throws NotAFacet.
DistanceVector distance_vector(const Complex& C, const OrderedFacet& F, const VertexSet& S);

/// True iff at every level the leading vertex realizes the vertex-distance of
/// the remaining facet to the current (reduced) target.
bool is_admissible(const Complex& C, const OrderedFacet& F, const VertexSet& S);

/// All admissible orderings of a facet, in lexicographic order of the vertex
/// sequence. Never empty: a distance-minimizing vertex exists at each level.
std::vector<OrderedFacet> admissible_orderings(const Complex& C, const Face& facet,
                                               const VertexSet& S);

/// Length of the longest common prefix of the two vertex sequences. A position
/// where the previous facet's vertex is absent from the new one ends the
/// prefix automatically.
int step_index(const OrderedFacet& F_prev, const OrderedFacet& F_next);

/// Admissible orderings of F_new_set maximizing the common-prefix index with
/// F_prev; all maximizers, sorted. Throws NoAdmissibleOrdering if the
/// admissible set is empty (not reachable for well-formed inputs).
std::vector<OrderedFacet> max_index_reorder(const Complex& C, const Face& F_new_set,
                                            const VertexSet& S, const OrderedFacet& F_prev);

}  // namespace simplexpaths
