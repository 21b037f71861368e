#include "simplexpaths/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simplexpaths/errors.hpp"

namespace simplexpaths {

VertexLabel FreshLabelSource::next(std::initializer_list<const Complex*> used) {
    while (true) {
        VertexLabel candidate = prefix_ + std::to_string(counter_++);
        bool taken = false;
        for (const Complex* c : used)
            if (c && c->has_vertex(candidate)) {
                taken = true;
                break;
            }
        if (!taken) return candidate;
    }
}

Complex join(const Complex& C1, const Complex& C2) {
    std::map<VertexLabel, VertexLabel> rename;
    FreshLabelSource fresh;
    for (const auto& v : C2.vertices())
        if (C1.has_vertex(v)) rename[v] = fresh.next({&C1, &C2});

    std::vector<Face> out;
    out.reserve(C1.facets().size() * C2.facets().size());
    for (const auto& f1 : C1.facets())
        for (const auto& f2 : C2.facets()) {
            Face g = f1;
            for (const auto& v : f2) {
                auto it = rename.find(v);
                g.push_back(it == rename.end() ? v : it->second);
            }
            out.push_back(make_face(std::move(g)));
        }
    return Complex::from_facets(std::move(out));
}

SuspensionResult suspension(const Complex& C) {
    FreshLabelSource fresh;
    const VertexLabel v1 = fresh.next({&C});
    const VertexLabel v2 = fresh.next({&C});
    std::vector<Face> out;
    for (const auto& f : C.facets()) {
        out.push_back(make_face(face_union(f, Face{v1})));
        out.push_back(make_face(face_union(f, Face{v2})));
    }
    return {Complex::from_facets(std::move(out)), v1, v2};
}

SuspensionResult one_point_suspension(const Complex& C, const VertexLabel& v) {
    (void)C.vertex_id(v);  // throws UnknownVertex
    FreshLabelSource fresh;
    const VertexLabel v1 = fresh.next({&C});
    const VertexLabel v2 = fresh.next({&C});
    const Face edge = make_face(Face{v1, v2});

    std::vector<Face> out;
    for (const auto& f : C.facets()) {
        if (face_contains(f, v)) {
            out.push_back(face_union(face_minus(f, v), edge));
        } else {
            out.push_back(face_union(f, Face{v1}));
            out.push_back(face_union(f, Face{v2}));
        }
    }
    return {Complex::from_facets(std::move(out)), v1, v2};
}

SubdivisionResult stellar_subdivision(const Complex& C, const Face& f) {
    if (f.empty()) throw NotAFace("stellar subdivision of the empty face");
    if (!C.has_face(f))
        throw NotAFace("stellar subdivision: " + set_to_string(f) + " is not a face");
    FreshLabelSource fresh("a");
    const VertexLabel a = fresh.next({&C});

    std::vector<Face> out;
    for (const auto& facet : C.facets()) {
        if (!is_subset(f, facet)) {
            out.push_back(facet);
        } else {
            for (const auto& x : f)
                out.push_back(make_face(face_union(face_minus(facet, x), Face{a})));
        }
    }
    return {Complex::from_facets(std::move(out)), a};
}

Complex subdivide_all_edges_at(const Complex& C, const VertexLabel& a) {
    const auto original_neighbors = C.neighbors(a);  // sorted
    const VertexSet everyone_else = face_minus(C.vertices(), a);

    Complex cur = C;
    for (const auto& b : original_neighbors)
        cur = stellar_subdivision(cur, make_face(Face{a, b})).complex;

    // every original vertex is now exactly one step farther from a
    for (const auto& v : everyone_else) {
        const ExtNat before = vertex_distance(C, a, VertexSet{v});
        const ExtNat after = vertex_distance(cur, a, VertexSet{v});
        const ExtNat expected = before.is_infinite()
                                    ? ExtNat::infinity()
                                    : ExtNat::finite(before.value() + 1);
        if (after != expected)
            throw Error("distance increment law violated at vertex '" + v + "'");
    }
    return cur;
}

StackComplex stack_complex(int l, int d) {
    if (l < 1 || d < 2) throw InvalidParams("stack_complex needs l >= 1 and d >= 2");
    const int top = l + d - 1;
    int width = 1;
    for (int t = top; t >= 10; t /= 10) ++width;
    auto vlabel = [&](int i) {
        std::string digits = std::to_string(i);
        return "v" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
    };

    StackComplex out;
    out.apex = "u";
    std::vector<Face> facets;
    for (int i = 1; i <= l; ++i) {
        Face f{out.apex};
        for (int j = i; j <= i + d - 1; ++j) f.push_back(vlabel(j));
        facets.push_back(make_face(std::move(f)));
    }
    out.complex = Complex::from_facets(std::move(facets));

    Face glue{out.apex};
    for (int j = 1; j <= d - 1; ++j) glue.push_back(vlabel(j));
    out.glue_face = make_face(std::move(glue));

    Face far{out.apex};
    for (int j = l; j <= top; ++j) far.push_back(vlabel(j));
    out.far_facet = make_face(std::move(far));
    out.far_vertex = vlabel(top);
    return out;
}

}  // namespace simplexpaths
