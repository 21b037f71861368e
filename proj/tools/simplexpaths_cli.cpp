// Command-line front end: check predicates, build and enumerate paths,
// generate the lower-bound families, and audit diameter bounds.
//
// Exit codes: 0 ok, 1 predicate false, 2 input error, 3 stuck,
//             4 bound violation, 5 cap exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "simplexpaths/bounds.hpp"
#include "simplexpaths/complex.hpp"
#include "simplexpaths/constructions.hpp"
#include "simplexpaths/errors.hpp"
#include "simplexpaths/generators.hpp"
#include "simplexpaths/io.hpp"
#include "simplexpaths/ordering.hpp"
#include "simplexpaths/pathfinder.hpp"

namespace sp = simplexpaths;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPredicateFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitStuck = 3;
constexpr int kExitBoundViolation = 4;
constexpr int kExitCapExceeded = 5;

std::uint64_t default_cap() {
    if (const char* env = std::getenv("SIMPLEXPATHS_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return sp::kDefaultCap;
}

int run_check(const std::string& file, bool all, bool want_normal, bool want_flag,
              bool want_banner, bool want_pm, bool want_vd) {
    sp::Complex C = sp::parse_facet_list_file(file);
    bool all_hold = true;
    auto report = [&](const std::string& name, bool value) {
        std::cout << name << ": " << (value ? "true" : "false") << "\n";
        all_hold = all_hold && value;
    };
    if (all || want_normal) report("normal", sp::is_normal(C));
    if (all || want_flag) report("flag", sp::is_flag(C));
    if (all || want_pm) {
        auto [pm, boundary] = sp::is_pseudomanifold(C);
        report("pseudomanifold", pm);
        if (pm) std::cout << "boundary_faces: " << boundary.size() << "\n";
    }
    if (all || want_banner) std::cout << "banner: " << sp::bannerness(C) << "\n";
    if (all || want_vd) report("vertex_decomposable", sp::is_vertex_decomposable(C));
    return all_hold ? kExitOk : kExitPredicateFalse;
}

int run_path(const std::string& file, const std::string& from, const std::string& to_facet,
             const std::string& to_set, bool enumerate, bool verify_segment,
             std::uint64_t cap) {
    sp::Complex C = sp::parse_facet_list_file(file);
    const sp::Face F0 = sp::parse_set(from);
    if (!C.has_facet(F0)) throw sp::NotAFacet(from + " is not a facet");

    sp::VertexSet S;
    sp::TargetMode mode;
    if (!to_facet.empty()) {
        const sp::Face T = sp::parse_set(to_facet);
        if (!C.has_facet(T)) throw sp::NotAFacet(to_facet + " is not a facet");
        S = T;
        mode = sp::TargetMode::Facet;
    } else {
        S = sp::parse_set(to_set);
        mode = sp::TargetMode::Set;
    }

    auto print_path = [&](const sp::DualPath& P) {
        std::cout << "target: " << sp::set_to_string(P.target) << "\n";
        for (std::size_t i = 0; i < P.steps.size(); ++i) {
            std::cout << sp::ordered_to_string(P.steps[i]) << "  "
                      << sp::distance_vector(C, P.steps[i], P.target).to_string();
            if (i > 0) {
                const auto v = sp::verdict(C, P.steps[i - 1], P.steps[i], P.target);
                std::cout << "  [monotone=" << (v.monotone ? "yes" : "no")
                          << " conservative=" << (v.conservative ? "yes" : "no")
                          << " index=" << v.index << " removed=" << v.removed << "]";
            }
            std::cout << "\n";
        }
        std::cout << "length: " << P.length() << "\n";
        if (verify_segment) {
            auto [ok, trace] = sp::is_combinatorial_segment(C, P);
            std::cout << "segment: " << (ok ? "true" : "false") << "\n" << trace.to_string(1);
        }
    };

    if (enumerate) {
        sp::EnumOptions opt;
        opt.cap = cap;
        auto res = sp::enumerate_paths(C, F0, S, mode, opt);
        std::cout << "paths: " << res.paths.size() << "\n";
        for (const auto& P : res.paths) {
            print_path(P);
            std::cout << "\n";
        }
        return res.capped ? kExitCapExceeded : kExitOk;
    }

    const auto seeds = sp::admissible_orderings(C, F0, S);
    const sp::DualPath P = (mode == sp::TargetMode::Facet)
                               ? sp::build_path_to_facet(C, seeds.front(), sp::Face(S))
                               : sp::build_path_to_set(C, seeds.front(), S);
    print_path(P);
    return kExitOk;
}

int run_generate(const std::string& kind, int d, int N, int l, const std::string& fixture_name,
                 const std::string& out) {
    std::string facet_path = out + ".cplx";
    std::string sidecar_path = out + ".json";
    if (kind == "fixture") {
        const sp::Fixture fx = sp::fixture(fixture_name);
        sp::write_facet_list_file(fx.complex, facet_path);
        std::cout << facet_path << "\n";
        return kExitOk;
    }
    if (kind == "stack") {
        const auto stack = sp::stack_complex(l, d);
        sp::write_facet_list_file(stack.complex, facet_path);
        std::cout << facet_path << "\n";
        return kExitOk;
    }
    sp::MarkedComplex mc;
    std::string params;
    if (kind == "ball") {
        mc = sp::exponential_ball(d, N);
        params = "d=" + std::to_string(d) + ",N=" + std::to_string(N);
    } else if (kind == "sphere") {
        mc = sp::hirsch_sphere(d, N);
        params = "d=" + std::to_string(d) + ",N=" + std::to_string(N);
    } else {
        throw sp::InvalidParams("unknown kind '" + kind + "'");
    }
    sp::write_facet_list_file(mc.complex, facet_path);
    std::ofstream side(sidecar_path);
    side << sp::marked_sidecar_json(mc, kind, params) << "\n";
    std::cout << facet_path << "\n" << sidecar_path << "\n";
    return kExitOk;
}

int run_audit(const std::string& file, std::uint64_t cap, int jobs,
              const std::string& bundle_path) {
    sp::Complex C = sp::parse_facet_list_file(file);
    sp::BoundReport rep = sp::audit(C, cap, jobs);
    std::cout << rep.to_json() << "\n";
    if (rep.any_violation()) {
        if (!bundle_path.empty()) {
            std::ofstream bundle(bundle_path);
            for (const auto& v : rep.violations) bundle << v << "\n";
        }
        return kExitBoundViolation;
    }
    if (rep.partial) return kExitCapExceeded;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monotone conservative dual paths in pure simplicial complexes"};
    app.require_subcommand(1);
    std::uint64_t cap = default_cap();
    int jobs = 1;
    app.add_option("--cap", cap, "node budget for enumerations");
    app.add_option("--jobs", jobs, "parallel workers for audit enumeration");

    auto* check = app.add_subcommand("check", "evaluate structural predicates");
    std::string check_file;
    bool f_all = false, f_normal = false, f_flag = false, f_banner = false, f_pm = false,
         f_vd = false;
    check->add_option("file", check_file)->required();
    check->add_flag("--all", f_all);
    check->add_flag("--normal", f_normal);
    check->add_flag("--flag", f_flag);
    check->add_flag("--banner", f_banner);
    check->add_flag("--pm", f_pm);
    check->add_flag("--vd", f_vd);

    auto* path = app.add_subcommand("path", "build or enumerate monotone conservative paths");
    std::string path_file, path_from, path_to_facet, path_to_set;
    bool path_enum = false, path_verify = false;
    path->add_option("file", path_file)->required();
    path->add_option("--from", path_from, "start facet, e.g. \"{a1,a2,a3}\"")->required();
    path->add_option("--to-facet", path_to_facet, "target facet");
    path->add_option("--to-set", path_to_set, "target vertex set");
    path->add_flag("--enumerate", path_enum);
    path->add_flag("--verify-segment", path_verify);

    auto* gen = app.add_subcommand("generate", "emit complexes in the facet-list format");
    std::string gen_kind, gen_fixture, gen_out = "out";
    int gen_d = 3, gen_N = 4, gen_l = 5;
    gen->add_option("kind", gen_kind, "ball|sphere|stack|fixture")->required();
    gen->add_option("name", gen_fixture, "fixture name (fixture kind only)");
    gen->add_option("-d", gen_d);
    gen->add_option("-N", gen_N);
    gen->add_option("-l", gen_l);
    gen->add_option("-o,--out", gen_out, "output path prefix");

    auto* aud = app.add_subcommand("audit", "evaluate the diameter bounds");
    std::string audit_file, audit_bundle;
    aud->add_option("file", audit_file)->required();
    aud->add_option("--bundle", audit_bundle, "write violation bundles to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_file, f_all || !(f_normal || f_flag || f_banner || f_pm || f_vd),
                             f_normal, f_flag, f_banner, f_pm, f_vd);
        if (path->parsed()) {
            if (path_to_facet.empty() == path_to_set.empty()) {
                std::cerr << "exactly one of --to-facet / --to-set is required\n";
                return kExitInputError;
            }
            return run_path(path_file, path_from, path_to_facet, path_to_set, path_enum,
                            path_verify, cap);
        }
        if (gen->parsed()) return run_generate(gen_kind, gen_d, gen_N, gen_l, gen_fixture, gen_out);
        if (aud->parsed()) return run_audit(audit_file, cap, jobs, audit_bundle);
    } catch (const sp::StuckError& e) {
        std::cerr << "stuck: " << e.what() << "\n";
        return kExitStuck;
    } catch (const sp::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const sp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
