#include "simplexpaths/pathfinder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ordering_detail.hpp"
#include "simplexpaths/errors.hpp"

namespace simplexpaths {

using detail::LinkCache;

std::vector<Face> DualPath::facet_sets() const {
    std::vector<Face> out;
    out.reserve(steps.size());
    for (const auto& of : steps) out.push_back(facet_set(of));
    return out;
}

std::string DualPath::to_string() const {
    std::string out = "target: " + set_to_string(target) + "\n";
    for (const auto& of : steps) out += ordered_to_string(of) + "\n";
    out += "length: " + std::to_string(length()) + "\n";
    return out;
}

namespace {

struct CapHit {};

void require_dual_path(const std::vector<Face>& sets) {
    if (sets.empty()) throw InvalidParams("empty dual path");
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        if (face_difference(sets[i], sets[i + 1]).size() != 1 ||
            sets[i].size() != sets[i + 1].size())
            throw NotAdjacent("facets " + set_to_string(sets[i]) + " and " +
                              set_to_string(sets[i + 1]) + " are not dual-graph adjacent");
}

/// Monotone-conservative successors of an admissible ordered facet: remove the
/// last-ordered vertex, reorder the new facet admissibly with maximum index,
/// and (optionally) keep only the lexicographically decreasing ones.
std::vector<OrderedFacet> mc_successors(LinkCache& lc, const OrderedFacet& F, const VertexSet& S,
                                        bool require_monotone) {
    const Complex& C = *lc.root()->complex;
    const Face fset = facet_set(F);
    const Face core = face_minus(fset, F.back());
    DistanceVector lam_prev;
    if (require_monotone) lam_prev = detail::distance_vector_cached(lc, F, S);

    std::vector<OrderedFacet> out;
    for (const auto& G : C.facets()) {
        if (G == fset || !is_subset(core, G)) continue;
        for (auto& cand : detail::max_index_reorder_cached(lc, G, S, F)) {
            if (!require_monotone || detail::distance_vector_cached(lc, cand, S) < lam_prev)
                out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool meets(const Face& f, const VertexSet& S) { return !face_intersection(f, S).empty(); }

}  // namespace

StepVerdict verdict(const Complex& C, const OrderedFacet& F_prev, const OrderedFacet& F_next,
                    const VertexSet& S) {
    const Face prev_set = facet_set(F_prev);
    const Face next_set = facet_set(F_next);
    if (!C.has_facet(prev_set) || !C.has_facet(next_set))
        throw NotAFacet("verdict: both endpoints must be facets");
    const Face removed = face_difference(prev_set, next_set);
    if (removed.size() != 1 || prev_set.size() != next_set.size())
        throw NotAdjacent("verdict: facets are not adjacent in the dual graph");

    LinkCache lc(C);
    StepVerdict v;
    v.removed = removed.front();
    v.anchor_before = F_prev.front();
    v.anchor_after = F_next.front();
    v.index = step_index(F_prev, F_next);

    v.monotone = detail::distance_vector_cached(lc, F_next, S) <
                 detail::distance_vector_cached(lc, F_prev, S);

    const bool removed_last = F_prev.back() == v.removed;
    const bool admissible = detail::is_admissible_cached(lc, F_next, S);
    bool max_index = false;
    if (admissible) {
        auto best = detail::max_index_reorder_cached(lc, next_set, S, F_prev);
        max_index = std::find(best.begin(), best.end(), F_next) != best.end();
    }
    v.conservative = removed_last && admissible && max_index;

    std::vector<std::string> reasons;
    if (!v.monotone) reasons.push_back("distance vector does not strictly decrease");
    if (!removed_last)
        reasons.push_back("removed vertex '" + v.removed + "' is not last in " +
                          ordered_to_string(F_prev));
    else if (!admissible)
        reasons.push_back("ordering " + ordered_to_string(F_next) + " is not admissible");
    else if (!max_index)
        reasons.push_back("ordering " + ordered_to_string(F_next) +
                          " does not have maximum index");
    for (std::size_t i = 0; i < reasons.size(); ++i)
        v.reason += (i ? "; " : "") + reasons[i];
    return v;
}

std::vector<OrderedFacet> find_conservative_steps(const Complex& C, const OrderedFacet& F,
                                                  const VertexSet& S) {
    LinkCache lc(C);
    if (!detail::is_admissible_cached(lc, F, S))
        throw NotAdmissible(ordered_to_string(F) + " is not admissible");
    auto out = mc_successors(lc, F, S, true);
    if (out.empty())
        throw StuckError("no monotone conservative step from " + ordered_to_string(F));
    return out;
}

DualPath build_path_to_set(const Complex& C, const OrderedFacet& F0, const VertexSet& S,
                           std::vector<std::string>* notices) {
    (void)notices;
    if (!C.has_facet(facet_set(F0)))
        throw NotAFacet("build_path_to_set: start is not a facet");
    LinkCache lc(C);
    if (!detail::is_admissible_cached(lc, F0, S))
        throw NotAdmissible(ordered_to_string(F0) + " is not admissible");

    DualPath path{{F0}, S};
    const std::size_t guard = C.facets().size() * 720 + 2;
    while (!meets(facet_set(path.steps.back()), S)) {
        auto succ = mc_successors(lc, path.steps.back(), S, true);
        if (succ.empty())
            throw StuckError("no monotone conservative step from " +
                             ordered_to_string(path.steps.back()));
        path.steps.push_back(succ.front());
        if (path.steps.size() > guard)
            throw Error("internal: path exceeded the monotone state bound");
    }
    return path;
}

DualPath build_path_to_facet(const Complex& C, const OrderedFacet& F0, const Face& F_target,
                             std::vector<std::string>* notices) {
    if (!C.has_facet(F_target))
        throw NotAFacet("build_path_to_facet: " + set_to_string(F_target) + " is not a facet");
    const VertexSet S = F_target;

    DualPath head = build_path_to_set(C, F0, S, notices);
    OrderedFacet last = head.steps.back();
    if (facet_set(last) == F_target) {
        head.target = S;
        return head;
    }

    const Face common = face_intersection(facet_set(last), F_target);
    const VertexLabel x = common.front();
    if (common.size() > 1) {
        if (notices)
            notices->push_back("facet " + set_to_string(facet_set(last)) +
                               " meets the target in " + set_to_string(common) +
                               "; recursing on '" + x + "'");
        if (last.front() != x) {
            // only reachable for a length-0 head; re-anchor at x
            LinkCache lc(C);
            for (const auto& cand :
                 detail::admissible_orderings_cached(lc, facet_set(last), S)) {
                if (cand.front() == x) {
                    last = cand;
                    break;
                }
            }
            head.steps.back() = last;
        }
    }

    const Complex L = link(C, Face{x});
    const OrderedFacet tail(last.begin() + 1, last.end());
    const DualPath sub = build_path_to_facet(L, tail, face_minus(F_target, x), notices);
    for (std::size_t i = 1; i < sub.steps.size(); ++i) {
        OrderedFacet lifted{x};
        lifted.insert(lifted.end(), sub.steps[i].begin(), sub.steps[i].end());
        head.steps.push_back(std::move(lifted));
    }
    head.target = S;
    return head;
}

namespace {

struct EnumContext {
    LinkCache lc;
    VertexSet S;
    TargetMode mode;
    Face target_facet;
    EnumOptions options;
    EnumResult result;

    EnumContext(const Complex& C, VertexSet s, TargetMode m, const EnumOptions& opt)
        : lc(C), S(std::move(s)), mode(m), options(opt) {
        if (mode == TargetMode::Facet) {
            target_facet = Face(S.begin(), S.end());
            if (!C.has_facet(target_facet))
                throw InvalidParams("facet-mode target " + set_to_string(target_facet) +
                                    " is not a facet");
        }
    }

    bool terminal(const Face& fset) const {
        return mode == TargetMode::Set ? meets(fset, S) : fset == target_facet;
    }

    void dfs(std::vector<OrderedFacet>& path) {
        if (++result.nodes > options.cap) {
            result.capped = true;
            throw CapHit{};
        }
        const OrderedFacet& cur = path.back();
        if (terminal(facet_set(cur))) {
            result.paths.push_back(DualPath{path, S});
            return;
        }
        auto succ = mc_successors(lc, cur, S, options.require_monotone);
        if (succ.empty()) {
            ++result.stuck_branches;
            return;
        }
        for (auto& next : succ) {
            path.push_back(std::move(next));
            dfs(path);
            path.pop_back();
        }
    }
};

}  // namespace

EnumResult enumerate_paths(const Complex& C, const Face& F0_set, const VertexSet& S,
                           TargetMode mode, const EnumOptions& options) {
    if (!C.has_facet(F0_set))
        throw NotAFacet("enumerate_paths: " + set_to_string(F0_set) + " is not a facet");
    EnumContext ctx(C, S, mode, options);
    try {
        for (auto& seed : detail::admissible_orderings_cached(ctx.lc, F0_set, S)) {
            std::vector<OrderedFacet> path{seed};
            ctx.dfs(path);
        }
    } catch (const CapHit&) {
    }
    return std::move(ctx.result);
}

namespace {

/// Memoized extremes over the acyclic monotone-conservative step graph.
class ExtremaContext {
  public:
    struct R {
        bool complete = false;
        std::uint64_t mn = 0;
        std::uint64_t mx = 0;
    };

    ExtremaContext(const Complex& C, VertexSet S, TargetMode mode, std::uint64_t cap)
        : lc_(C), S_(std::move(S)), mode_(mode), cap_(cap) {
        if (mode_ == TargetMode::Facet) {
            target_facet_ = Face(S_.begin(), S_.end());
            if (!C.has_facet(target_facet_))
                throw InvalidParams("facet-mode target " + set_to_string(target_facet_) +
                                    " is not a facet");
        }
    }

    PathExtremes from(const Face& F0_set) {
        PathExtremes out;
        try {
            for (const auto& seed : detail::admissible_orderings_cached(lc_, F0_set, S_)) {
                const R r = rec(seed);
                if (!r.complete) continue;
                if (!out.any_complete) {
                    out.any_complete = true;
                    out.min_length = r.mn;
                    out.max_length = r.mx;
                } else {
                    out.min_length = std::min(out.min_length, r.mn);
                    out.max_length = std::max(out.max_length, r.mx);
                }
            }
        } catch (const CapHit&) {
            capped_ = true;
            out.any_complete = false;
        }
        out.capped = capped_;
        out.states = nodes_;
        return out;
    }

    /// Follows memoized decisions to materialize one extreme complete path.
    std::optional<DualPath> extract(const Face& F0_set, bool longest) {
        PathExtremes ext = from(F0_set);
        if (capped_ || !ext.any_complete) return std::nullopt;
        const std::uint64_t want = longest ? ext.max_length : ext.min_length;
        OrderedFacet cur;
        for (const auto& seed : detail::admissible_orderings_cached(lc_, F0_set, S_)) {
            const R r = rec(seed);
            if (r.complete && (longest ? r.mx : r.mn) == want) {
                cur = seed;
                break;
            }
        }
        DualPath path{{cur}, S_};
        std::uint64_t remaining = want;
        while (remaining > 0) {
            for (const auto& next : mc_successors(lc_, path.steps.back(), S_, true)) {
                const R r = rec(next);
                if (r.complete && (longest ? r.mx : r.mn) == remaining - 1) {
                    path.steps.push_back(next);
                    --remaining;
                    break;
                }
            }
        }
        return path;
    }

    [[nodiscard]] bool capped() const { return capped_; }

  private:
    R rec(const OrderedFacet& state) {
        if (terminal(facet_set(state))) return R{true, 0, 0};
        auto it = memo_.find(state);
        if (it != memo_.end()) {
            if (!it->second.has_value())
                throw Error("internal: cycle in the monotone step graph");
            return *it->second;
        }
        if (++nodes_ > cap_) throw CapHit{};
        memo_.emplace(state, std::nullopt);
        R out;
        for (const auto& next : mc_successors(lc_, state, S_, true)) {
            const R r = rec(next);
            if (!r.complete) continue;
            if (!out.complete) {
                out = R{true, r.mn + 1, r.mx + 1};
            } else {
                out.mn = std::min(out.mn, r.mn + 1);
                out.mx = std::max(out.mx, r.mx + 1);
            }
        }
        memo_[state] = out;
        return out;
    }

    bool terminal(const Face& fset) const {
        return mode_ == TargetMode::Set ? meets(fset, S_) : fset == target_facet_;
    }

    LinkCache lc_;
    VertexSet S_;
    TargetMode mode_;
    Face target_facet_;
    std::map<OrderedFacet, std::optional<R>> memo_;
    std::uint64_t nodes_ = 0;
    std::uint64_t cap_;
    bool capped_ = false;
};

}  // namespace

PathExtremes path_extremes(const Complex& C, const Face& F0_set, const VertexSet& S,
                           TargetMode mode, std::uint64_t cap) {
    if (!C.has_facet(F0_set))
        throw NotAFacet("path_extremes: " + set_to_string(F0_set) + " is not a facet");
    ExtremaContext ctx(C, S, mode, cap);
    return ctx.from(F0_set);
}

std::optional<DualPath> extract_extreme_path(const Complex& C, const Face& F0_set,
                                             const VertexSet& S, TargetMode mode, bool longest,
                                             std::uint64_t cap) {
    ExtremaContext ctx(C, S, mode, cap);
    return ctx.extract(F0_set, longest);
}

bool is_monotone_path(const Complex& C, const DualPath& P) {
    require_dual_path(P.facet_sets());
    LinkCache lc(C);
    for (std::size_t i = 0; i + 1 < P.steps.size(); ++i)
        if (!(detail::distance_vector_cached(lc, P.steps[i + 1], P.target) <
              detail::distance_vector_cached(lc, P.steps[i], P.target)))
            return false;
    return true;
}

bool is_conservative_path(const Complex& C, const DualPath& P) {
    require_dual_path(P.facet_sets());
    LinkCache lc(C);
    if (!detail::is_admissible_cached(lc, P.steps.front(), P.target)) return false;
    for (std::size_t i = 0; i + 1 < P.steps.size(); ++i) {
        const OrderedFacet& prev = P.steps[i];
        const OrderedFacet& next = P.steps[i + 1];
        const Face removed = face_difference(facet_set(prev), facet_set(next));
        if (prev.back() != removed.front()) return false;
        auto best = detail::max_index_reorder_cached(lc, facet_set(next), P.target, prev);
        if (std::find(best.begin(), best.end(), next) == best.end()) return false;
    }
    return true;
}

bool is_nonrevisiting(const DualPath& P) {
    std::map<VertexLabel, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < P.steps.size(); ++i)
        for (const auto& v : P.steps[i]) where[v].push_back(i);
    for (const auto& [v, idx] : where)
        for (std::size_t j = 0; j + 1 < idx.size(); ++j)
            if (idx[j + 1] != idx[j] + 1) return false;
    return true;
}

std::string SegmentTrace::to_string(int indent) const {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    std::string out = pad + "case " + std::to_string(case_applied) + " [" +
                      (ok ? "ok" : "fail") + "]";
    if (!anchor.empty()) out += " anchor=" + anchor;
    if (case_applied == 3 && ok) {
        out += " ell=" + std::to_string(ell) + " k=" + std::to_string(split) +
               " y=" + next_anchor;
    }
    if (!reason.empty()) out += " (" + reason + ")";
    out += "\n";
    for (const auto& child : children) out += child.to_string(indent + 1);
    return out;
}

namespace {

SegmentTrace segment_any_anchor(const Complex& C, const std::vector<Face>& sets,
                                const VertexSet& S);

SegmentTrace segment_with_anchor(const Complex& C, const std::vector<Face>& sets,
                                 const VertexSet& S, const VertexLabel& x0) {
    SegmentTrace t;
    t.anchor = x0;
    const Face& F0 = sets.front();
    const std::size_t N = sets.size() - 1;

    if (meets(F0, S)) {
        t.case_applied = 1;
        t.ok = (N == 0);
        if (!t.ok) t.reason = "first facet meets the target but N > 0";
        return t;
    }
    if (C.facet_size() == 1) {
        t.case_applied = 2;
        if (N != 1) {
            t.reason = "dimension 0 requires exactly one step";
            return t;
        }
        if (!meets(sets[1], S)) {
            t.reason = "second facet does not meet the target";
            return t;
        }
        t.ok = true;
        return t;
    }

    t.case_applied = 3;
    for (std::size_t i = 0; i < N; ++i)
        if (meets(sets[i], S)) {
            t.reason = "facet " + std::to_string(i) + " meets the target before the last";
            return t;
        }
    if (!meets(sets[N], S)) {
        t.reason = "last facet does not meet the target";
        return t;
    }

    const ExtNat ell = vertex_distance(C, F0, S);
    if (ell.is_infinite()) {
        t.reason = "target unreachable from the first facet";
        return t;
    }
    t.ell = ell.value();

    int k = -1;
    for (std::size_t i = 1; i <= N; ++i)
        if (vertex_distance(C, sets[i], S) < ell) {
            k = static_cast<int>(i);
            break;
        }
    if (k < 0) {
        t.reason = "no facet strictly closer to the target";
        return t;
    }
    t.split = k;

    std::vector<VertexLabel> closer;
    for (const auto& v : sets[static_cast<std::size_t>(k)])
        if (vertex_distance(C, v, S) == ExtNat::finite(t.ell - 1)) closer.push_back(v);
    if (closer.size() != 1) {
        t.reason = closer.empty()
                       ? "no vertex of the split facet is one step closer to the target"
                       : "the closer vertex in the split facet is not unique";
        return t;
    }
    t.next_anchor = closer.front();

    for (int i = 0; i <= k; ++i)
        if (!face_contains(sets[static_cast<std::size_t>(i)], x0)) {
            t.reason = "anchor '" + x0 + "' missing from facet " + std::to_string(i);
            return t;
        }

    // link part in lk(x0), toward the neighbors of x0 one step closer to S
    VertexSet reduced;
    for (const auto& w : C.neighbors(x0))
        if (vertex_distance(C, w, S) == ExtNat::finite(t.ell - 1)) reduced.push_back(w);
    std::vector<Face> link_sets;
    for (int i = 0; i <= k; ++i)
        link_sets.push_back(face_minus(sets[static_cast<std::size_t>(i)], x0));
    SegmentTrace link_part = segment_any_anchor(link(C, Face{x0}), link_sets, reduced);

    std::vector<Face> tail_sets(sets.begin() + k, sets.end());
    SegmentTrace tail_part = segment_with_anchor(C, tail_sets, S, closer.front());

    t.ok = link_part.ok && tail_part.ok;
    if (!t.ok)
        t.reason = !link_part.ok ? "link path is not a combinatorial segment"
                                 : "tail is not a combinatorial segment";
    if (t.ok) {
        t.split_points.push_back(static_cast<std::size_t>(k));
        for (std::size_t s : tail_part.split_points)
            t.split_points.push_back(static_cast<std::size_t>(k) + s);
    }
    t.children.push_back(std::move(link_part));
    t.children.push_back(std::move(tail_part));
    return t;
}

SegmentTrace segment_any_anchor(const Complex& C, const std::vector<Face>& sets,
                                const VertexSet& S) {
    SegmentTrace failed;
    for (const auto& x0 : sets.front()) {
        SegmentTrace t = segment_with_anchor(C, sets, S, x0);
        if (t.ok) return t;
        if (failed.reason.empty()) {
            failed = t;
        } else {
            failed.reason += "; anchor " + x0 + ": " + t.reason;
        }
    }
    failed.ok = false;
    return failed;
}

}  // namespace

std::pair<bool, SegmentTrace> is_combinatorial_segment(const Complex& C, const DualPath& P) {
    SegmentTrace t;
    if (P.steps.empty()) {
        t.reason = "empty path";
        return {false, t};
    }
    const auto sets = P.facet_sets();
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
        if (face_difference(sets[i], sets[i + 1]).size() != 1 ||
            sets[i].size() != sets[i + 1].size()) {
            t.reason = "steps " + std::to_string(i) + "," + std::to_string(i + 1) +
                       " are not dual-graph adjacent";
            return {false, t};
        }
    for (const auto& f : sets)
        if (!C.has_facet(f)) {
            t.reason = set_to_string(f) + " is not a facet";
            return {false, t};
        }
    SegmentTrace res = segment_any_anchor(C, sets, P.target);
    return {res.ok, res};
}

namespace {

std::pair<bool, std::string> facet_segment_rec(const Complex& K, const std::vector<Face>& sets,
                                               const Face& T) {
    const VertexSet S = T;
    const std::size_t N = sets.size() - 1;
    std::size_t t = 0;
    bool found = false;
    for (std::size_t i = 0; i <= N; ++i)
        if (meets(sets[i], S)) {
            t = i;
            found = true;
            break;
        }
    if (!found) return {false, "no facet meets the target"};

    std::vector<Face> prefix(sets.begin(), sets.begin() + static_cast<long>(t) + 1);
    DualPath pre;
    for (auto& f : prefix) pre.steps.push_back(f);
    pre.target = S;
    auto [ok, trace] = is_combinatorial_segment(K, pre);
    if (!ok) return {false, "prefix toward the target set fails: " + trace.reason};

    if (t == N) {
        if (sets[N] == T) return {true, ""};
        return {false, "final facet meets but does not equal the target"};
    }

    const Face X = face_intersection(sets[t], T);
    for (const auto& x : X) {
        bool contained = true;
        for (std::size_t i = t; i <= N; ++i)
            if (!face_contains(sets[i], x)) {
                contained = false;
                break;
            }
        if (!contained) continue;
        std::vector<Face> rest;
        for (std::size_t i = t; i <= N; ++i) rest.push_back(face_minus(sets[i], x));
        auto sub = facet_segment_rec(link(K, Face{x}), rest, face_minus(T, x));
        if (sub.first) return {true, ""};
    }
    return {false, "no meeting vertex supports the link recursion"};
}

}  // namespace

std::pair<bool, std::string> is_facet_segment(const Complex& C, const DualPath& P,
                                              const Face& T) {
    if (!C.has_facet(T)) throw NotAFacet("is_facet_segment: target is not a facet");
    const auto sets = P.facet_sets();
    require_dual_path(sets);
    return facet_segment_rec(C, sets, T);
}

namespace {

bool exists_mc_ordering(LinkCache& lc, const std::vector<Face>& sets, const VertexSet& S) {
    const std::size_t N = sets.size() - 1;
    std::function<bool(std::size_t, const OrderedFacet&)> advance =
        [&](std::size_t i, const OrderedFacet& cur) -> bool {
        if (i == N) return true;
        const Face removed = face_difference(sets[i], sets[i + 1]);
        if (cur.back() != removed.front()) return false;
        const DistanceVector lam_prev = detail::distance_vector_cached(lc, cur, S);
        for (const auto& cand : detail::max_index_reorder_cached(lc, sets[i + 1], S, cur)) {
            if (detail::distance_vector_cached(lc, cand, S) < lam_prev && advance(i + 1, cand))
                return true;
        }
        return false;
    };
    for (const auto& seed : detail::admissible_orderings_cached(lc, sets[0], S))
        if (advance(0, seed)) return true;
    return false;
}

}  // namespace

EquivalenceReport equivalence_check(const Complex& C, const Face& F0_set, const VertexSet& S,
                                    std::uint64_t cap) {
    if (!C.has_facet(F0_set))
        throw NotAFacet("equivalence_check: " + set_to_string(F0_set) + " is not a facet");
    EquivalenceReport rep;
    LinkCache lc(C);

    const auto& facets = C.facets();
    const int f0 = C.facet_index(F0_set);

    auto check_candidate = [&](const std::vector<int>& idx) {
        ++rep.paths_checked;
        std::vector<Face> sets;
        sets.reserve(idx.size());
        for (int i : idx) sets.push_back(facets[static_cast<std::size_t>(i)]);
        DualPath P;
        for (const auto& f : sets) P.steps.push_back(f);
        P.target = S;
        const bool lhs = is_combinatorial_segment(C, P).first;
        const bool rhs = exists_mc_ordering(lc, sets, S);
        if (lhs != rhs) {
            std::string d = "segment=" + std::string(lhs ? "true" : "false") +
                            " mc=" + std::string(rhs ? "true" : "false") + " path:";
            for (const auto& f : sets) d += " " + set_to_string(f);
            rep.discrepancies.push_back(std::move(d));
        }
    };

    if (meets(facets[static_cast<std::size_t>(f0)], S)) {
        check_candidate({f0});
        return rep;
    }

    std::vector<char> visited(facets.size(), 0);
    std::vector<int> stack{f0};
    visited[static_cast<std::size_t>(f0)] = 1;
    std::function<void()> dfs = [&]() {
        if (++rep.nodes > cap) {
            rep.capped = true;
            throw CapHit{};
        }
        const int cur = stack.back();
        for (int nb : C.dual_adjacency()[static_cast<std::size_t>(cur)]) {
            if (visited[static_cast<std::size_t>(nb)]) continue;
            if (meets(facets[static_cast<std::size_t>(nb)], S)) {
                stack.push_back(nb);
                check_candidate(stack);
                stack.pop_back();
            } else {
                visited[static_cast<std::size_t>(nb)] = 1;
                stack.push_back(nb);
                dfs();
                stack.pop_back();
                visited[static_cast<std::size_t>(nb)] = 0;
            }
        }
    };
    try {
        dfs();
    } catch (const CapHit&) {
    }
    return rep;
}

ConservativeMonotoneReport conservative_implies_monotone_check(const Complex& C,
                                                               std::uint64_t cap) {
    if (!is_pseudomanifold(C).first)
        throw InvalidParams("conservative_implies_monotone_check needs a pseudomanifold");
    ConservativeMonotoneReport rep;
    LinkCache lc(C);
    const std::size_t guard = C.facets().size() * 720 + 2;

    std::function<void(std::vector<OrderedFacet>&, const VertexSet&)> walk =
        [&](std::vector<OrderedFacet>& path, const VertexSet& S) {
            if (++rep.paths_explored > cap) {
                rep.capped = true;
                throw CapHit{};
            }
            const OrderedFacet cur = path.back();  // path reallocates below
            if (meets(facet_set(cur), S)) return;
            if (path.size() > guard) {
                rep.counterexamples.push_back("nonterminating conservative walk from " +
                                              ordered_to_string(path.front()));
                return;
            }
            const DistanceVector lam_cur = detail::distance_vector_cached(lc, cur, S);
            for (const auto& next : mc_successors(lc, cur, S, false)) {
                ++rep.steps_checked;
                const bool monotone = detail::distance_vector_cached(lc, next, S) < lam_cur;
                if (!monotone) {
                    rep.counterexamples.push_back(
                        "conservative non-monotone step " + ordered_to_string(cur) + " -> " +
                        ordered_to_string(next) + " toward " + set_to_string(S));
                    continue;
                }
                path.push_back(next);
                walk(path, S);
                path.pop_back();
            }
        };

    try {
        for (const auto& T : C.facets()) {
            const VertexSet S = T;
            for (const auto& F0 : C.facets()) {
                for (const auto& seed : detail::admissible_orderings_cached(lc, F0, S)) {
                    std::vector<OrderedFacet> path{seed};
                    walk(path, S);
                }
            }
        }
    } catch (const CapHit&) {
    }
    return rep;
}

MaxlengthResult maxlength(const Complex& C, MaxlengthScope scope, std::uint64_t cap) {
    MaxlengthResult out;
    if (scope == MaxlengthScope::FacetTargets) {
        for (const auto& T : C.facets()) {
            ExtremaContext ctx(C, T, TargetMode::Facet, cap);
            for (const auto& F0 : C.facets()) {
                const PathExtremes ext = ctx.from(F0);
                if (ext.any_complete) out.value = std::max(out.value, ext.max_length);
            }
            out.capped = out.capped || ctx.capped();
        }
        return out;
    }
    // all nonempty vertex subsets, set-termination
    const auto& verts = C.vertices();
    if (verts.size() > 20)
        throw InvalidParams("all-subset target scope is limited to 20 vertices");
    for (std::uint32_t mask = 1; mask < (1u << verts.size()); ++mask) {
        VertexSet S;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (mask & (1u << i)) S.push_back(verts[i]);
        ExtremaContext ctx(C, S, TargetMode::Set, cap);
        for (const auto& F0 : C.facets()) {
            const PathExtremes ext = ctx.from(F0);
            if (ext.any_complete) out.value = std::max(out.value, ext.max_length);
        }
        out.capped = out.capped || ctx.capped();
    }
    return out;
}

}  // namespace simplexpaths
