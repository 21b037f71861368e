#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexpaths/complex.hpp"
#include "simplexpaths/ordering.hpp"

namespace simplexpaths {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// A dual path of ordered facets with its target set. Consecutive facet sets
/// differ in exactly one vertex.
struct DualPath {
    std::vector<OrderedFacet> steps;
    VertexSet target;

    [[nodiscard]] std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    [[nodiscard]] std::vector<Face> facet_sets() const;
    /// Header "target: {...}", one ordered facet per line, trailer "length: N".
    [[nodiscard]] std::string to_string() const;
};

/// Per-step diagnostic for the step from F_prev to F_next.
struct StepVerdict {
    int index = 0;                 // longest common prefix of the two orderings
    VertexLabel anchor_before;
    VertexLabel anchor_after;
    VertexLabel removed;           // the unique vertex of F_prev minus F_next
    bool monotone = false;
    bool conservative = false;
    std::string reason;            // first failed condition, empty when both hold
};

/// Evaluates monotonicity (strict lexicographic decrease of the distance
/// vectors) and conservativeness (last-ordered vertex removed, admissible
/// reordering of maximum index). Throws NotAdjacent.
StepVerdict verdict(const Complex& C, const OrderedFacet& F_prev, const OrderedFacet& F_next,
                    const VertexSet& S);

/// All ordered facets F' adjacent to F such that [F, F'] is monotone and
/// conservative. Throws StuckError when empty (violated precondition) and
/// NotAdmissible when F is not admissible.
std::vector<OrderedFacet> find_conservative_steps(const Complex& C, const OrderedFacet& F,
                                                  const VertexSet& S);

/// Repeats monotone conservative steps (lexicographically smallest successor)
/// until the current facet meets S. Throws NotAdmissible, StuckError.
DualPath build_path_to_set(const Complex& C, const OrderedFacet& F0, const VertexSet& S,
                           std::vector<std::string>* notices = nullptr);

/// Monotone conservative path toward the vertex set of F_target whose last
/// facet is exactly F_target: reach a facet meeting the target at a vertex x,
/// then recurse in the link of x. Throws NotAFacet, NotAdmissible, StuckError.
DualPath build_path_to_facet(const Complex& C, const OrderedFacet& F0, const Face& F_target,
                             std::vector<std::string>* notices = nullptr);

enum class TargetMode {
    Set,    // paths end at the first facet meeting the target set
    Facet,  // target is a facet's vertex set; paths end at that facet
};

struct EnumOptions {
    std::uint64_t cap = kDefaultCap;  // explored node budget
    bool require_monotone = true;     // false enumerates conservative-only walks
};

struct EnumResult {
    std::vector<DualPath> paths;
    bool capped = false;
    std::uint64_t nodes = 0;
    std::uint64_t stuck_branches = 0;  // branches that died before terminating
};

/// Depth-first enumeration over all admissible initial orderings of F0_set and
/// all monotone-conservative successors, until the termination condition of
/// the selected mode. Partial results are returned with capped = true.
EnumResult enumerate_paths(const Complex& C, const Face& F0_set, const VertexSet& S,
                           TargetMode mode, const EnumOptions& options = {});

/// Memoized summary over the acyclic graph of monotone conservative steps:
/// extreme lengths of complete paths from F0_set. Much cheaper than explicit
/// enumeration.
struct PathExtremes {
    bool any_complete = false;
    std::uint64_t min_length = 0;
    std::uint64_t max_length = 0;
    bool capped = false;
    std::uint64_t states = 0;
};
PathExtremes path_extremes(const Complex& C, const Face& F0_set, const VertexSet& S,
                           TargetMode mode, std::uint64_t cap = kDefaultCap);

/// Strictly decreasing distance vectors along the whole path.
bool is_monotone_path(const Complex& C, const DualPath& P);

/// First facet admissible and every step conservative.
bool is_conservative_path(const Complex& C, const DualPath& P);

/// For every vertex, the facets of the path containing it form a contiguous
/// block of indices.
bool is_nonrevisiting(const DualPath& P);

/// Trace of the recursive combinatorial-segment check.
struct SegmentTrace {
    int case_applied = 0;  // 1, 2 or 3
    bool ok = false;
    std::string reason;
    VertexLabel anchor;                      // x0 of this recursion level
    std::uint64_t ell = 0;                   // vdist(F0, S) in case 3
    int split = -1;                          // k of case 3
    VertexLabel next_anchor;                 // y of case 3
    std::vector<std::size_t> split_points;   // path indices where the anchor changes
    std::vector<SegmentTrace> children;      // link part, then tail part
    [[nodiscard]] std::string to_string(int indent = 0) const;
};

/// Direct recursive implementation of the combinatorial-segment definition on
/// the facet sets of P, toward P.target; the anchor is searched exhaustively.
std::pair<bool, SegmentTrace> is_combinatorial_segment(const Complex& C, const DualPath& P);

/// Between-facets variant: a segment toward the vertex set of T followed by
/// the recursion in the link of the meeting vertex, finishing exactly at T.
std::pair<bool, std::string> is_facet_segment(const Complex& C, const DualPath& P,
                                              const Face& T);

struct EquivalenceReport {
    std::uint64_t paths_checked = 0;
    std::vector<std::string> discrepancies;
    bool capped = false;
    std::uint64_t nodes = 0;
};

/// Enumerates every simple dual path from F0_set whose last facet is the only
/// one meeting S, and asserts that segmenthood and the existence of a
/// monotone-conservative ordering assignment agree.
EquivalenceReport equivalence_check(const Complex& C, const Face& F0_set, const VertexSet& S,
                                    std::uint64_t cap = kDefaultCap);

struct ConservativeMonotoneReport {
    std::uint64_t paths_explored = 0;
    std::uint64_t steps_checked = 0;
    std::vector<std::string> counterexamples;  // conservative but non-monotone steps
    bool capped = false;
};

/// On a pseudomanifold, walks conservative steps with the monotonicity filter
/// dropped, over all start facets and facet targets, and records any
/// non-monotone step. Throws InvalidParams when C is not a pseudomanifold.
ConservativeMonotoneReport conservative_implies_monotone_check(const Complex& C,
                                                               std::uint64_t cap = kDefaultCap);

enum class MaxlengthScope {
    FacetTargets,      // targets are vertex sets of facets (between-facet paths)
    AllSubsetTargets,  // every nonempty vertex subset, set-termination
};

struct MaxlengthResult {
    std::uint64_t value = 0;
    bool capped = false;
};

/// Maximum length of monotone conservative paths over all start facets,
/// admissible start orderings, and targets in scope.
MaxlengthResult maxlength(const Complex& C, MaxlengthScope scope = MaxlengthScope::FacetTargets,
                          std::uint64_t cap = kDefaultCap);

/// One complete monotone conservative path realizing path_extremes' maximum
/// (used for violation bundles); empty when no complete path exists.
std::optional<DualPath> extract_extreme_path(const Complex& C, const Face& F0_set,
                                             const VertexSet& S, TargetMode mode, bool longest,
                                             std::uint64_t cap = kDefaultCap);

}  // namespace simplexpaths
