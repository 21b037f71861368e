#include "simplexpaths/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "simplexpaths/errors.hpp"

namespace simplexpaths {

Complex Complex::from_facets(std::vector<Face> facet_list) {
    if (facet_list.empty()) throw EmptyInput("complex needs at least one facet");

    for (auto& f : facet_list) {
        f = make_face(std::move(f));
        if (f.empty()) throw EmptyInput("facets must be nonempty vertex sets");
    }
    std::sort(facet_list.begin(), facet_list.end());
    facet_list.erase(std::unique(facet_list.begin(), facet_list.end()), facet_list.end());

    const std::size_t d = facet_list.front().size();
    for (const auto& f : facet_list)
        if (f.size() != d)
            throw PurityError("facet " + set_to_string(f) + " has " +
                              std::to_string(f.size()) + " vertices, expected " +
                              std::to_string(d));

    Complex c;
    c.facet_size_ = static_cast<int>(d);
    c.facets_ = std::move(facet_list);
    c.build_structures();
    return c;
}

Complex Complex::empty_complex() {
    Complex c;
    c.facet_size_ = 0;
    c.facets_ = {Face{}};
    return c;
}

void Complex::build_structures() {
    std::set<VertexLabel> vset;
    for (const auto& f : facets_) vset.insert(f.begin(), f.end());
    vertices_.assign(vset.begin(), vset.end());

    const int n = static_cast<int>(vertices_.size());
    adjacency_.assign(n, {});
    vertex_facets_.assign(n, {});

    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        const auto& f = facets_[fi];
        std::vector<int> ids;
        ids.reserve(f.size());
        for (const auto& v : f) ids.push_back(vertex_id(v));
        for (int id : ids) vertex_facets_[id].push_back(static_cast<int>(fi));
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                adj[ids[i]][ids[j]] = adj[ids[j]][ids[i]] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (adj[u][v]) adjacency_[u].push_back(v);

    // all-pairs BFS over the 1-skeleton
    skeleton_dist_.assign(static_cast<std::size_t>(n) * n, -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        int* dist = skeleton_dist_.data() + static_cast<std::size_t>(s) * n;
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adjacency_[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
    }

    const int m = static_cast<int>(facets_.size());
    dual_adjacency_.assign(m, {});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Face diff = face_difference(facets_[i], facets_[j]);
            if (diff.size() == 1) {
                dual_adjacency_[i].push_back(j);
                dual_adjacency_[j].push_back(i);
            }
        }
}

bool Complex::has_vertex(const VertexLabel& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Complex::vertex_id(const VertexLabel& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw UnknownVertex("vertex '" + v + "' is not in the complex");
    return static_cast<int>(it - vertices_.begin());
}

bool Complex::has_face(const Face& f) const {
    if (f.empty()) return true;
    for (const auto& facet : facets_)
        if (is_subset(f, facet)) return true;
    return false;
}

bool Complex::has_facet(const Face& f) const { return facet_index(f) >= 0; }

int Complex::facet_index(const Face& f) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), f);
    if (it == facets_.end() || *it != f) return -1;
    return static_cast<int>(it - facets_.begin());
}

std::vector<VertexLabel> Complex::neighbors(const VertexLabel& v) const {
    std::vector<VertexLabel> out;
    for (int id : adjacency_[vertex_id(v)]) out.push_back(vertices_[id]);
    return out;
}

ExtNat Complex::skeleton_distance(int u, int v) const {
    const int n = static_cast<int>(vertices_.size());
    int raw = skeleton_dist_[static_cast<std::size_t>(u) * n + v];
    return raw < 0 ? ExtNat::infinity() : ExtNat::finite(static_cast<std::uint64_t>(raw));
}

std::vector<Face> Complex::all_faces() const {
    std::set<Face> faces;
    faces.insert(Face{});
    for (const auto& facet : facets_) {
        const std::size_t d = facet.size();
        for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
            Face f;
            for (std::size_t i = 0; i < d; ++i)
                if (mask & (1u << i)) f.push_back(facet[i]);
            faces.insert(std::move(f));
        }
    }
    return {faces.begin(), faces.end()};
}

std::string Complex::canonical_key() const {
    std::string key;
    for (const auto& f : facets_) {
        if (!key.empty()) key += ";";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) key += " ";
            key += f[i];
        }
    }
    return key;
}

Complex link(const Complex& C, const Face& f) {
    if (!C.has_face(f)) throw NotAFace("link: " + set_to_string(f) + " is not a face");
    if (f.empty()) return C;
    if (static_cast<int>(f.size()) == C.facet_size()) return Complex::empty_complex();
    std::vector<Face> out;
    for (const auto& facet : C.facets())
        if (is_subset(f, facet)) out.push_back(face_difference(facet, f));
    return Complex::from_facets(std::move(out));
}

Complex star(const Complex& C, const Face& f) {
    if (!C.has_face(f)) throw NotAFace("star: " + set_to_string(f) + " is not a face");
    std::vector<Face> out;
    for (const auto& facet : C.facets())
        if (is_subset(f, facet)) out.push_back(facet);
    return Complex::from_facets(std::move(out));
}

std::vector<Face> deletion_facets(const Complex& C, const Face& f) {
    if (f.empty()) throw InvalidParams("deletion of the empty face removes every face");
    if (!C.has_face(f)) throw NotAFace("deletion: " + set_to_string(f) + " is not a face");
    std::vector<Face> candidates;
    for (const auto& facet : C.facets()) {
        if (!is_subset(f, facet)) {
            candidates.push_back(facet);
        } else {
            for (const auto& x : f) candidates.push_back(face_minus(facet, x));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Face> maximal;
    for (const auto& g : candidates) {
        bool contained = false;
        for (const auto& h : candidates)
            if (g != h && is_subset(g, h)) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(g);
    }
    return maximal;
}

Complex deletion(const Complex& C, const Face& f) {
    auto facets = deletion_facets(C, f);
    if (facets.empty()) throw EmptyInput("deletion has no faces left");
    return Complex::from_facets(std::move(facets));
}

namespace {

ExtNat set_distance_ids(const Complex& C, const std::vector<int>& S, const std::vector<int>& T) {
    if (S.empty() || T.empty()) return ExtNat::infinity();
    if (C.dimension() == 0) {
        for (int u : S)
            for (int v : T)
                if (u == v) return ExtNat::finite(0);
        return ExtNat::finite(1);
    }
    ExtNat best = ExtNat::infinity();
    for (int u : S)
        for (int v : T) {
            ExtNat d = C.skeleton_distance(u, v);
            if (d < best) best = d;
        }
    return best;
}

std::vector<int> to_ids(const Complex& C, const VertexSet& S) {
    std::vector<int> ids;
    ids.reserve(S.size());
    for (const auto& v : S) ids.push_back(C.vertex_id(v));
    return ids;
}

}  // namespace

ExtNat vertex_distance(const Complex& C, const VertexSet& S, const VertexSet& T) {
    return set_distance_ids(C, to_ids(C, S), to_ids(C, T));
}

ExtNat vertex_distance(const Complex& C, const VertexLabel& v, const VertexSet& T) {
    return set_distance_ids(C, {C.vertex_id(v)}, to_ids(C, T));
}

bool is_normal(const Complex& C) {
    if (C.is_empty_complex()) return true;
    // the empty face is included: its star is the whole complex, so this also
    // demands a connected dual graph (facets with empty intersection still
    // need some dual path between them)
    for (const auto& f : C.all_faces()) {
        std::vector<int> members;
        for (std::size_t i = 0; i < C.facets().size(); ++i)
            if (is_subset(f, C.facets()[i])) members.push_back(static_cast<int>(i));
        if (members.size() <= 1) continue;
        // BFS inside the star's dual graph
        std::set<int> star(members.begin(), members.end());
        std::deque<int> queue{members.front()};
        std::set<int> seen{members.front()};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : C.dual_adjacency()[u])
                if (star.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        }
        if (seen.size() != members.size()) return false;
    }
    return true;
}

std::pair<bool, std::vector<Face>> is_pseudomanifold(const Complex& C) {
    std::map<Face, int> ridge_count;
    for (const auto& facet : C.facets())
        for (const auto& x : facet) ridge_count[face_minus(facet, x)] += 1;
    std::vector<Face> boundary;
    bool ok = true;
    for (const auto& [ridge, count] : ridge_count) {
        if (count == 1) boundary.push_back(ridge);
        if (count > 2) ok = false;
    }
    if (!ok) boundary.clear();
    return {ok, boundary};
}

namespace {

/// Enumerates cliques of the 1-skeleton with size in [3, max_size] and feeds
/// them to visit(T). Vertices are taken in increasing id order.
template <typename Visit>
void enumerate_cliques(const Complex& C, std::size_t max_size, Visit visit) {
    const int n = static_cast<int>(C.vertices().size());
    const auto& adj = C.skeleton_adjacency();
    std::vector<std::vector<char>> is_adj(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int w : adj[u]) is_adj[u][w] = 1;

    std::vector<int> clique;
    auto extend = [&](auto&& self, int start) -> void {
        if (clique.size() >= 3) visit(clique);
        if (clique.size() == max_size) return;
        for (int w = start; w < n; ++w) {
            bool joined = true;
            for (int u : clique)
                if (!is_adj[u][w]) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            clique.push_back(w);
            self(self, w + 1);
            clique.pop_back();
        }
    };
    extend(extend, 0);
}

Face ids_to_face(const Complex& C, const std::vector<int>& ids) {
    Face f;
    f.reserve(ids.size());
    for (int id : ids) f.push_back(C.vertices()[id]);
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

std::vector<Face> minimal_nonfaces(const Complex& C) {
    std::vector<Face> out;
    const int n = static_cast<int>(C.vertices().size());
    // size-2 minimal nonfaces are the non-edges
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Face pair{C.vertices()[u], C.vertices()[v]};
            std::sort(pair.begin(), pair.end());
            if (!C.has_face(pair)) out.push_back(pair);
        }
    // larger ones are cliques whose ridges are all faces; size is capped at
    // d+1 because T minus a vertex must be a face
    enumerate_cliques(C, static_cast<std::size_t>(C.facet_size()) + 1,
                      [&](const std::vector<int>& ids) {
                          Face T = ids_to_face(C, ids);
                          if (C.has_face(T)) return;
                          for (const auto& x : T)
                              if (!C.has_face(face_minus(T, x))) return;
                          out.push_back(T);
                      });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_flag(const Complex& C) {
    for (const auto& f : minimal_nonfaces(C))
        if (f.size() != 2) return false;
    return true;
}

int bannerness(const Complex& C) {
    if (C.dimension() < 1) throw InvalidParams("bannerness needs dimension >= 1");
    std::size_t worst = 0;
    enumerate_cliques(C, static_cast<std::size_t>(C.facet_size()) + 1,
                      [&](const std::vector<int>& ids) {
                          if (ids.size() <= worst) return;
                          Face T = ids_to_face(C, ids);
                          if (C.has_face(T)) return;
                          for (const auto& x : T)
                              if (C.has_face(face_minus(T, x))) {
                                  worst = T.size();
                                  return;
                              }
                      });
    return std::max<std::size_t>(2, worst);
}

namespace {

bool is_vd_impl(const Complex& C, std::unordered_map<std::string, bool>& memo) {
    if (C.facets().size() == 1) return true;  // simplex (or the empty complex)
    const std::string key = C.canonical_key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    memo.emplace(key, false);  // guards against accidental re-entry

    bool ok = false;
    for (const auto& x : C.vertices()) {
        std::vector<Face> del;
        bool in_all = true;
        for (const auto& facet : C.facets())
            if (!face_contains(facet, x)) {
                del.push_back(facet);
                in_all = false;
            }
        if (in_all) continue;
        // del_C(x) must be pure of the same dimension: every ridge F-x of a
        // facet through x has to sit inside a facet avoiding x
        bool pure = true;
        for (const auto& facet : C.facets()) {
            if (!face_contains(facet, x)) continue;
            const Face ridge = face_minus(facet, x);
            bool covered = false;
            for (const auto& g : del)
                if (is_subset(ridge, g)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                pure = false;
                break;
            }
        }
        if (!pure) continue;
        if (!is_vd_impl(link(C, Face{x}), memo)) continue;
        if (is_vd_impl(Complex::from_facets(del), memo)) {
            ok = true;
            break;
        }
    }
    memo[key] = ok;
    return ok;
}

}  // namespace

bool is_vertex_decomposable(const Complex& C) {
    std::unordered_map<std::string, bool> memo;
    return is_vd_impl(C, memo);
}

ExtNat dual_diameter(const Complex& C) {
    const int m = static_cast<int>(C.facets().size());
    int best = 0;
    std::vector<int> dist(m);
    for (int s = 0; s < m; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : C.dual_adjacency()[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        for (int v = 0; v < m; ++v) {
            if (dist[v] < 0) return ExtNat::infinity();
            best = std::max(best, dist[v]);
        }
    }
    return ExtNat::finite(static_cast<std::uint64_t>(best));
}

}  // namespace simplexpaths
