#include "simplexpaths/ordering.hpp"

#include <algorithm>

#include "ordering_detail.hpp"
#include "simplexpaths/errors.hpp"

namespace simplexpaths {

std::string DistanceVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += entries_[i].to_string();
    }
    out += ")";
    return out;
}

VertexSet reduce_target(const Complex& C, const VertexLabel& v1, const VertexSet& S) {
    const int vid = C.vertex_id(v1);
    for (const auto& s : S) (void)C.vertex_id(s);  // validate

    VertexSet out;
    if (face_contains(S, v1)) {
        for (int nb : C.skeleton_adjacency()[vid]) {
            const VertexLabel& w = C.vertices()[nb];
            if (face_contains(S, w)) out.push_back(w);
        }
        return out;
    }
    const ExtNat m = vertex_distance(C, v1, S);
    if (m.is_infinite() || m.value() == 0) return out;
    const ExtNat want = ExtNat::finite(m.value() - 1);
    for (int nb : C.skeleton_adjacency()[vid]) {
        const VertexLabel& w = C.vertices()[nb];
        if (vertex_distance(C, w, S) == want) out.push_back(w);
    }
    return out;
}

namespace {

void require_facet(const Complex& C, const OrderedFacet& F, const char* who) {
    Face f = facet_set(F);
    if (f.size() != F.size())
        throw NotAFacet(std::string(who) + ": repeated vertex in " + ordered_to_string(F));
    if (!C.has_facet(f))
        throw NotAFacet(std::string(who) + ": " + set_to_string(f) + " is not a facet");
}

}  // namespace

namespace detail {

DistanceVector distance_vector_cached(LinkCache& lc, const OrderedFacet& F, const VertexSet& S) {
    std::vector<ExtNat> entries;
    entries.reserve(F.size());
    LinkCache::Node* node = lc.root();
    VertexSet cur = S;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const Complex& K = *node->complex;
        entries.push_back(vertex_distance(K, F[i], cur));
        if (i + 1 == F.size()) break;
        cur = reduce_target(K, F[i], cur);
        node = lc.child(node, F[i]);
    }
    return DistanceVector(std::move(entries));
}

bool is_admissible_cached(LinkCache& lc, const OrderedFacet& F, const VertexSet& S) {
    LinkCache::Node* node = lc.root();
    VertexSet cur = S;
    Face remaining = facet_set(F);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const Complex& K = *node->complex;
        if (vertex_distance(K, F[i], cur) != vertex_distance(K, remaining, cur)) return false;
        if (i + 1 == F.size()) break;
        cur = reduce_target(K, F[i], cur);
        remaining = face_minus(remaining, F[i]);
        node = lc.child(node, F[i]);
    }
    return true;
}

namespace {

void orderings_rec(LinkCache& lc, LinkCache::Node* node, const Face& remaining,
                   const VertexSet& S, OrderedFacet& prefix, std::vector<OrderedFacet>& out) {
    const Complex& K = *node->complex;
    const ExtNat m = vertex_distance(K, remaining, S);
    for (const auto& v : remaining) {
        if (vertex_distance(K, v, S) != m) continue;
        prefix.push_back(v);
        if (remaining.size() == 1) {
            out.push_back(prefix);
        } else {
            VertexSet reduced = reduce_target(K, v, S);
            orderings_rec(lc, lc.child(node, v), face_minus(remaining, v), reduced, prefix, out);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OrderedFacet> admissible_orderings_cached(LinkCache& lc, const Face& facet,
                                                      const VertexSet& S) {
    std::vector<OrderedFacet> out;
    OrderedFacet prefix;
    orderings_rec(lc, lc.root(), facet, S, prefix, out);
    return out;
}

std::vector<OrderedFacet> max_index_reorder_cached(LinkCache& lc, const Face& F_new_set,
                                                   const VertexSet& S,
                                                   const OrderedFacet& F_prev) {
    auto candidates = admissible_orderings_cached(lc, F_new_set, S);
    if (candidates.empty())
        throw NoAdmissibleOrdering("no admissible ordering of " + set_to_string(F_new_set));
    int best = -1;
    for (const auto& cand : candidates) best = std::max(best, step_index(F_prev, cand));
    std::vector<OrderedFacet> out;
    for (auto& cand : candidates)
        if (step_index(F_prev, cand) == best) out.push_back(std::move(cand));
    return out;
}

}  // namespace detail

DistanceVector distance_vector(const Complex& C, const OrderedFacet& F, const VertexSet& S) {
    require_facet(C, F, "distance_vector");
    detail::LinkCache lc(C);
    return detail::distance_vector_cached(lc, F, S);
}

bool is_admissible(const Complex& C, const OrderedFacet& F, const VertexSet& S) {
    require_facet(C, F, "is_admissible");
    detail::LinkCache lc(C);
    return detail::is_admissible_cached(lc, F, S);
}

std::vector<OrderedFacet> admissible_orderings(const Complex& C, const Face& facet,
                                               const VertexSet& S) {
    if (!C.has_facet(facet))
        throw NotAFacet("admissible_orderings: " + set_to_string(facet) + " is not a facet");
    detail::LinkCache lc(C);
    return detail::admissible_orderings_cached(lc, facet, S);
}

int step_index(const OrderedFacet& F_prev, const OrderedFacet& F_next) {
    const std::size_t n = std::min(F_prev.size(), F_next.size());
    std::size_t k = 0;
    while (k < n && F_prev[k] == F_next[k]) ++k;
    return static_cast<int>(k);
}

std::vector<OrderedFacet> max_index_reorder(const Complex& C, const Face& F_new_set,
                                            const VertexSet& S, const OrderedFacet& F_prev) {
    if (!C.has_facet(F_new_set))
        throw NotAFacet("max_index_reorder: " + set_to_string(F_new_set) + " is not a facet");
    detail::LinkCache lc(C);
    return detail::max_index_reorder_cached(lc, F_new_set, S, F_prev);
}

}  // namespace simplexpaths
