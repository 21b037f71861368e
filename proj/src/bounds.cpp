#include "simplexpaths/bounds.hpp"

#include <algorithm>
#include <thread>
#include <json.hpp>

#include "simplexpaths/errors.hpp"

namespace simplexpaths {

namespace {

struct TargetObservation {
    std::uint64_t max_len = 0;
    bool any = false;
    bool capped = false;
    Face best_start;
};

/// Longest monotone conservative path toward one facet target, over all
/// start facets.
TargetObservation observe_target(const Complex& C, const Face& T, std::uint64_t cap) {
    TargetObservation obs;
    for (const auto& F0 : C.facets()) {
        PathExtremes ext = path_extremes(C, F0, T, TargetMode::Facet, cap);
        obs.capped = obs.capped || ext.capped;
        if (ext.any_complete && (!obs.any || ext.max_length > obs.max_len)) {
            obs.any = true;
            obs.max_len = ext.max_length;
            obs.best_start = F0;
        }
    }
    return obs;
}

}  // namespace

BoundReport audit(const Complex& C, std::uint64_t cap, int jobs) {
    BoundReport rep;
    rep.n = static_cast<int>(C.vertices().size());
    rep.d = C.facet_size();
    rep.normal = is_normal(C);
    auto [pm, boundary] = is_pseudomanifold(C);
    rep.pseudomanifold = pm;
    rep.boundaryless = pm && boundary.empty();
    rep.flag = is_flag(C);
    rep.banner_k = rep.d >= 2 ? bannerness(C) : 2;
    rep.vertex_decomposable = is_vertex_decomposable(C);
    rep.diameter = dual_diameter(C);

    if (!rep.normal) return rep;  // only structural flags for non-normal input

    const auto& targets = C.facets();
    std::vector<TargetObservation> per_target(targets.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < targets.size(); ++i)
            per_target[i] = observe_target(C, targets[i], cap);
    } else {
        // strided fan-out; the merge below reads results in index order
        std::vector<std::thread> workers;
        const int n_workers = std::min<int>(jobs, static_cast<int>(targets.size()));
        for (int w = 0; w < n_workers; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < targets.size();
                     i += static_cast<std::size_t>(n_workers))
                    per_target[i] = observe_target(C, targets[i], cap);
            });
        for (auto& t : workers) t.join();
    }
    Face worst_target;
    Face worst_start;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        rep.partial = rep.partial || per_target[i].capped;
        if (per_target[i].any && per_target[i].max_len >= rep.observed_max_path) {
            rep.observed_max_path = per_target[i].max_len;
            worst_target = targets[i];
            worst_start = per_target[i].best_start;
        }
    }

    const auto n64 = static_cast<std::uint64_t>(rep.n);
    auto shifted = [&](int e) {
        return e >= 0 ? (n64 << e) : (n64 >> 1);  // n*2^e, floor(n/2) for e = -1
    };
    rep.bounds.push_back({"larman", rep.d >= 2 ? shifted(rep.d - 2) : 1, true, true});
    rep.bounds.push_back({"pseudomanifold", rep.d >= 2 ? shifted(rep.d - 3) : 1,
                          rep.boundaryless, true});
    rep.bounds.push_back(
        {"hirsch", static_cast<std::uint64_t>(std::max(0, rep.n - rep.d)), rep.flag, true});
    rep.bounds.push_back(
        {"banner", rep.d >= 2 ? shifted(rep.banner_k - 2) : 1, rep.d >= 2, true});

    for (auto& b : rep.bounds) {
        if (!b.applies) continue;
        b.satisfied = rep.observed_max_path <= b.value;
        if (!b.satisfied && !worst_target.empty()) {
            auto witness = extract_extreme_path(C, worst_start, worst_target,
                                                TargetMode::Facet, true, cap);
            std::string bundle = "bound " + b.name + "=" + std::to_string(b.value) +
                                 " exceeded by length " +
                                 std::to_string(rep.observed_max_path);
            if (witness) bundle += "\n" + witness->to_string();
            rep.violations.push_back(std::move(bundle));
        }
    }
    return rep;
}

bool banner_bound_check(const Complex& C, std::uint64_t cap) {
    BoundReport rep = audit(C, cap);
    for (const auto& b : rep.bounds)
        if (b.name == "banner" && b.applies) return b.satisfied;
    return true;
}

std::string BoundReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["d"] = d;
    j["flags"] = {
        {"normal", normal},
        {"pseudomanifold", pseudomanifold},
        {"boundaryless", boundaryless},
        {"flag", flag},
        {"k_banner", banner_k},
        {"vertex_decomposable", vertex_decomposable},
    };
    j["diameter"] = diameter.is_infinite() ? nlohmann::ordered_json("inf")
                                           : nlohmann::ordered_json(diameter.value());
    j["observed_max_path"] = observed_max_path;
    j["partial"] = partial;
    nlohmann::ordered_json jb = nlohmann::ordered_json::object();
    for (const auto& b : bounds) {
        jb[b.name] = {
            {"value", b.value},
            {"applies", b.applies},
            {"satisfied", b.satisfied},
        };
    }
    j["bounds"] = jb;
    j["violations"] = violations;
    return j.dump(indent);
}

}  // namespace simplexpaths
