#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplexpaths/complex.hpp"
#include "simplexpaths/pathfinder.hpp"

namespace simplexpaths {

struct BoundEntry {
    std::string name;      // larman, pseudomanifold, hirsch, banner
    std::uint64_t value = 0;
    bool applies = false;  // precondition of the bound holds for this complex
    bool satisfied = true; // observed_max_path <= value (when it applies)
};

struct BoundReport {
    int n = 0;
    int d = 0;
    bool normal = false;
    bool pseudomanifold = false;
    bool boundaryless = false;
    bool flag = false;
    bool vertex_decomposable = false;
    int banner_k = 0;
    ExtNat diameter;
    std::uint64_t observed_max_path = 0;
    bool partial = false;  // enumeration hit the cap
    std::vector<BoundEntry> bounds;
    std::vector<std::string> violations;  // machine-readable counterexample bundles

    [[nodiscard]] bool any_violation() const { return !violations.empty(); }
    /// JSON with stable key order.
    [[nodiscard]] std::string to_json(int indent = 2) const;
};

/// Computes structural flags, enumerates monotone conservative paths between
/// facet targets up to the cap, and evaluates every applicable diameter bound.
/// jobs > 1 fans the per-target enumeration out to that many workers; the
/// merge is deterministic.
BoundReport audit(const Complex& C, std::uint64_t cap = kDefaultCap, int jobs = 1);

/// True iff every enumerated monotone conservative path respects n*2^(k-2)
/// with k the bannerness of C.
bool banner_bound_check(const Complex& C, std::uint64_t cap = kDefaultCap);

}  // namespace simplexpaths
