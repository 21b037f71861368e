#include "simplexpaths/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "simplexpaths/errors.hpp"

namespace simplexpaths {

Complex parse_facet_list(std::istream& in) {
    std::vector<Face> facets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<VertexLabel> labels;
        std::string tok;
        while (tokens >> tok) labels.push_back(tok);
        if (labels.empty()) continue;
        facets.push_back(make_face(std::move(labels)));
    }
    if (facets.empty()) throw ParseError("no facets found in input");
    return Complex::from_facets(std::move(facets));
}

Complex parse_facet_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_facet_list(in);
}

std::string emit_canonical(const Complex& C) {
    std::vector<std::string> lines;
    lines.reserve(C.facets().size());
    for (const auto& f : C.facets()) {
        std::string line;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) line += " ";
            line += f[i];
        }
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

void write_facet_list_file(const Complex& C, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << emit_canonical(C);
}

std::string marked_sidecar_json(const MarkedComplex& mc, const std::string& kind,
                                const std::string& params) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["params"] = params;
    j["vertices"] = mc.complex.vertices().size();
    j["facets"] = mc.complex.facets().size();
    j["F1"] = mc.F1;
    j["F2"] = mc.F2;
    j["x1"] = mc.x1;
    j["x2"] = mc.x2;
    j["claimed_min_length"] = mc.claimed_min_length;
    return j.dump(2);
}

}  // namespace simplexpaths
