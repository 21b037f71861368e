#include "simplexpaths/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "simplexpaths/constructions.hpp"
#include "simplexpaths/errors.hpp"

namespace simplexpaths {

namespace {

Fixture make_fig2() {
    // triangulated strip, bottom row a1 a2 b3 b1 d5 c1, top row a3 u2 b2 u4 c2 c3
    const std::vector<VertexLabel> bottom{"a1", "a2", "b3", "b1", "d5", "c1"};
    const std::vector<VertexLabel> top{"a3", "u2", "b2", "u4", "c2", "c3"};
    std::vector<Face> facets;
    for (std::size_t i = 0; i + 1 < bottom.size(); ++i) {
        facets.push_back(make_face({bottom[i], bottom[i + 1], top[i]}));
        facets.push_back(make_face({bottom[i + 1], top[i], top[i + 1]}));
    }
    Fixture fx;
    fx.complex = Complex::from_facets(std::move(facets));
    fx.named_orderings["F1"] = {"a1", "a2", "a3"};
    fx.named_orderings["F2"] = {"b1", "b2", "b3"};
    fx.named_orderings["F3"] = {"c1", "c2", "c3"};
    fx.named_facets["F1"] = make_face({"a1", "a2", "a3"});
    fx.named_facets["F2"] = make_face({"b1", "b2", "b3"});
    fx.named_facets["F3"] = make_face({"c1", "c2", "c3"});
    fx.target = make_face({"c1", "c2"});  // s1 = c1, s2 = c2
    return fx;
}

Fixture make_fig3() {
    std::vector<Face> facets{
        make_face({"a1", "a2", "a3"}), make_face({"a1", "a2", "a4"}),
        make_face({"a1", "a3", "a5"}), make_face({"a1", "a4", "a6"}),
        make_face({"a1", "a5", "a7"}), make_face({"a1", "a6", "a7"}),
        make_face({"a6", "a7", "a8"}),
    };
    Fixture fx;
    fx.complex = Complex::from_facets(std::move(facets));
    fx.named_orderings["F"] = {"a1", "a2", "a3"};
    fx.named_orderings["G1"] = {"a5", "a1", "a3"};
    fx.named_orderings["G2"] = {"a1", "a5", "a3"};
    fx.named_orderings["H1"] = {"a4", "a1", "a2"};
    fx.named_orderings["H2"] = {"a1", "a4", "a2"};
    fx.named_facets["F"] = make_face({"a1", "a2", "a3"});
    fx.named_facets["G"] = make_face({"a1", "a3", "a5"});
    fx.named_facets["H"] = make_face({"a1", "a2", "a4"});
    fx.target = make_face({"a8"});
    return fx;
}

Fixture make_fan3() {
    Fixture fx;
    fx.complex = Complex::from_facets(
        {make_face({"1", "2"}), make_face({"1", "3"}), make_face({"1", "4"})});
    fx.named_orderings["F"] = {"1", "2"};
    fx.named_orderings["G"] = {"1", "3"};
    fx.named_facets["F"] = make_face({"1", "2"});
    fx.named_facets["G"] = make_face({"1", "3"});
    fx.target = make_face({"4"});
    return fx;
}

std::string padded(int i, int width) {
    std::string digits = std::to_string(i);
    return std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

}  // namespace

Fixture fixture(const std::string& name) {
    if (name == "fig2") return make_fig2();
    if (name == "fig3") return make_fig3();
    if (name == "fan3") return make_fan3();
    throw UnknownFixture("unknown fixture '" + name + "'");
}

MarkedComplex exponential_ball(int d, int N) {
    if (d < 2 || N < 4) throw InvalidParams("exponential_ball needs d >= 2 and N >= 4");

    // base: path complex with N+4 vertices
    MarkedComplex cur;
    {
        std::vector<Face> edges;
        const int count = N + 4;
        for (int i = 0; i + 1 < count; ++i)
            edges.push_back(make_face({"p" + padded(i, 2), "p" + padded(i + 1, 2)}));
        cur.complex = Complex::from_facets(std::move(edges));
        cur.F1 = make_face({"p" + padded(0, 2), "p" + padded(1, 2)});
        cur.F2 = make_face({"p" + padded(N + 2, 2), "p" + padded(N + 3, 2)});
        cur.x1 = "p" + padded(0, 2);
        cur.x2 = "p" + padded(N + 3, 2);
    }

    for (int delta = 2; delta <= d - 1; ++delta) {
        // one-point suspension at x1
        auto ops = one_point_suspension(cur.complex, cur.x1);
        const VertexLabel u1 = ops.v1;
        const VertexLabel u2 = ops.v2;

        // gluing face of the previous stage: drop the smallest non-marked
        // vertex of F2 so that G2 contains x2 and lies in the boundary
        const Face G2 = face_minus(cur.F2, face_minus(cur.F2, cur.x2).front());

        std::vector<Face> facets = ops.complex.facets();
        MarkedComplex next;
        FreshLabelSource fresh("q" + std::to_string(delta) + "_");

        Complex assembled = ops.complex;
        for (int side = 1; side <= 2; ++side) {
            const VertexLabel& u_side = (side == 1) ? u1 : u2;
            StackComplex stack = stack_complex(delta, delta);  // k_i = delta facets

            // identification: apex -> u_side, glue vertices -> G2 in lex order
            std::map<VertexLabel, VertexLabel> rename;
            rename[stack.apex] = u_side;
            const Face glue_rest = face_minus(stack.glue_face, stack.apex);
            for (std::size_t i = 0; i < glue_rest.size(); ++i) rename[glue_rest[i]] = G2[i];
            for (const auto& v : stack.complex.vertices()) {
                if (!rename.count(v)) rename[v] = fresh.next({&assembled});
            }
            auto renamed = [&rename](const Face& f) {
                Face g;
                g.reserve(f.size());
                for (const auto& v : f) g.push_back(rename.at(v));
                return make_face(std::move(g));
            };
            for (const auto& f : stack.complex.facets()) facets.push_back(renamed(f));
            assembled = Complex::from_facets(facets);

            if (side == 1) {
                next.F1 = renamed(stack.far_facet);
                next.x1 = rename.at(stack.far_vertex);
            } else {
                next.F2 = renamed(stack.far_facet);
                next.x2 = rename.at(stack.far_vertex);
            }
        }
        next.complex = std::move(assembled);
        cur = std::move(next);
    }

    const std::size_t expected = static_cast<std::size_t>(N) +
                                 static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    if (cur.complex.vertices().size() != expected)
        throw Error("exponential_ball: vertex count " +
                    std::to_string(cur.complex.vertices().size()) + " != " +
                    std::to_string(expected));
    for (const auto& [facet, vertex] : {std::pair{cur.F1, cur.x1}, std::pair{cur.F2, cur.x2}}) {
        int containing = 0;
        for (const auto& f : cur.complex.facets())
            if (face_contains(f, vertex)) ++containing;
        if (containing != 1 || !face_contains(facet, vertex))
            throw Error("exponential_ball: marked vertex '" + vertex +
                        "' is not confined to its marked facet");
    }

    cur.claimed_min_length = (static_cast<std::uint64_t>(N) + 3) << (d - 2);
    return cur;
}

namespace {

/// Number of distinct shortest u-v paths in the 1-skeleton.
std::uint64_t count_shortest_paths(const Complex& C, const VertexLabel& from,
                                   const VertexLabel& to) {
    const int n = static_cast<int>(C.vertices().size());
    const int s = C.vertex_id(from);
    const int t = C.vertex_id(to);
    std::vector<int> dist(n, -1);
    std::vector<std::uint64_t> ways(n, 0);
    dist[s] = 0;
    ways[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : C.skeleton_adjacency()[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                ways[w] = ways[u];
                queue.push_back(w);
            } else if (dist[w] == dist[u] + 1) {
                ways[w] += ways[u];
            }
        }
    }
    return ways[t];
}

}  // namespace

MarkedComplex hirsch_sphere(int d, int N) {
    if (d < 2 || N < 7) throw InvalidParams("hirsch_sphere needs d >= 2 and N >= 7");

    MarkedComplex cur;
    {
        std::vector<Face> edges;
        for (int i = 0; i < N; ++i)
            edges.push_back(make_face({"c" + padded(i, 2), "c" + padded((i + 1) % N, 2)}));
        cur.complex = Complex::from_facets(std::move(edges));
        const int m = N / 2;
        cur.F1 = make_face({"c" + padded(0, 2), "c" + padded(1, 2)});
        cur.F2 = make_face({"c" + padded(m, 2), "c" + padded(m + 1, 2)});
        cur.x1 = "c" + padded(0, 2);
        cur.x2 = "c" + padded(m + 1, 2);
    }

    for (int delta = 2; delta <= d - 1; ++delta) {
        // properties of the incoming stage
        if (vertex_distance(cur.complex, cur.x1, VertexSet{cur.x2}) < ExtNat::finite(3))
            throw Error("hirsch_sphere: marked vertices closer than 3 apart");
        const auto ys = cur.complex.neighbors(cur.x2);
        if (static_cast<int>(ys.size()) != 2 * delta - 2)
            throw Error("hirsch_sphere: marked vertex degree is not 2d-2");

        auto ops = one_point_suspension(cur.complex, cur.x1);
        const VertexLabel u = ops.v1;
        const VertexLabel v = ops.v2;
        Complex work = std::move(ops.complex);

        std::map<VertexLabel, VertexLabel> side_u, side_v;  // y -> subdivision vertex
        for (const auto& y : ys) {
            auto su = stellar_subdivision(work, make_face(Face{u, y}));
            side_u[y] = su.new_vertex;
            auto sv = stellar_subdivision(su.complex, make_face(Face{v, y}));
            side_v[y] = sv.new_vertex;
            work = std::move(sv.complex);
        }
        auto su_x2 = stellar_subdivision(work, make_face(Face{u, cur.x2}));
        auto sv_x2 = stellar_subdivision(su_x2.complex, make_face(Face{v, cur.x2}));
        const VertexLabel u_prime = su_x2.new_vertex;
        const VertexLabel v_prime = sv_x2.new_vertex;
        auto su_last = stellar_subdivision(sv_x2.complex, make_face(Face{u, u_prime}));
        auto sv_last = stellar_subdivision(su_last.complex, make_face(Face{v, v_prime}));
        const VertexLabel x1_new = su_last.new_vertex;
        const VertexLabel x2_new = sv_last.new_vertex;
        work = std::move(sv_last.complex);

        MarkedComplex next;
        next.F1 = make_face(Face{u, x1_new});
        next.F2 = make_face(Face{v, x2_new});
        for (const auto& y : face_minus(cur.F2, cur.x2)) {
            next.F1 = make_face(face_union(next.F1, Face{side_u.at(y)}));
            next.F2 = make_face(face_union(next.F2, Face{side_v.at(y)}));
        }
        next.x1 = x1_new;
        next.x2 = x2_new;
        if (!work.has_facet(next.F1) || !work.has_facet(next.F2))
            throw Error("hirsch_sphere: marked facets missing after subdivision");

        // properties of the outgoing stage: degree 2(delta+1)-2 and the
        // suspension edge as the unique shortest route between the marks
        for (const auto& x : {x1_new, x2_new})
            if (static_cast<int>(work.neighbors(x).size()) != 2 * delta)
                throw Error("hirsch_sphere: new marked vertex has wrong degree");
        if (vertex_distance(work, x1_new, VertexSet{x2_new}) != ExtNat::finite(3) ||
            count_shortest_paths(work, x1_new, x2_new) != 1)
            throw Error("hirsch_sphere: shortest path between marks is not unique");

        next.complex = std::move(work);
        cur = std::move(next);
    }

    std::size_t expected = static_cast<std::size_t>(N);
    for (int delta = 2; delta <= d - 1; ++delta) expected += 4 * delta + 1;
    if (cur.complex.vertices().size() != expected)
        throw Error("hirsch_sphere: vertex count " +
                    std::to_string(cur.complex.vertices().size()) + " != " +
                    std::to_string(expected));

    cur.claimed_min_length = d >= 3 ? (static_cast<std::uint64_t>(N) << (d - 3))
                                    : static_cast<std::uint64_t>(N) / 2;
    return cur;
}

}  // namespace simplexpaths
