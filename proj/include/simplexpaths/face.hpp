#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace simplexpaths {

using VertexLabel = std::string;

/// A face is a set of vertex labels, kept as a sorted, duplicate-free vector.
/// The empty face is allowed (it is a face of every nonempty complex).
using Face = std::vector<VertexLabel>;

/// A target set of vertices, same canonical representation as Face.
using VertexSet = std::vector<VertexLabel>;

/// A facet with a total order on its vertices; position 0 is the anchor.
using OrderedFacet = std::vector<VertexLabel>;

inline Face make_face(std::vector<VertexLabel> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

inline Face make_face(std::initializer_list<const char*> labels) {
    std::vector<VertexLabel> v(labels.begin(), labels.end());
    return make_face(std::move(v));
}

inline bool face_contains(const Face& f, const VertexLabel& v) {
    return std::binary_search(f.begin(), f.end(), v);
}

inline bool is_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_minus(const Face& f, const VertexLabel& v) {
    Face out;
    out.reserve(f.size());
    for (const auto& x : f)
        if (x != v) out.push_back(x);
    return out;
}

inline Face face_union(const Face& a, const Face& b) {
    Face out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_difference(const Face& a, const Face& b) {
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Underlying set of an ordered facet.
inline Face facet_set(const OrderedFacet& of) {
    Face f(of.begin(), of.end());
    std::sort(f.begin(), f.end());
    return f;
}

/// "{a,b,c}" with sorted members.
std::string set_to_string(const Face& f);

/// "(a b c)" preserving order.
std::string ordered_to_string(const OrderedFacet& of);

/// Parse "{a,b,c}" (whitespace tolerated). Throws ParseError.
Face parse_set(const std::string& text);

/// Parse "(a b c)". Throws ParseError.
OrderedFacet parse_ordered(const std::string& text);

}  // namespace simplexpaths
