#include "simplexpaths/face.hpp"

#include <sstream>

#include "simplexpaths/errors.hpp"

namespace simplexpaths {

std::string set_to_string(const Face& f) {
    std::string out = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += f[i];
    }
    out += "}";
    return out;
}

std::string ordered_to_string(const OrderedFacet& of) {
    std::string out = "(";
    for (std::size_t i = 0; i < of.size(); ++i) {
        if (i) out += " ";
        out += of[i];
    }
    out += ")";
    return out;
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(const std::string& body, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(body);
    while (std::getline(in, token, sep)) {
        token = strip(token);
        if (!token.empty()) out.push_back(token);
    }
    return out;
}

}  // namespace

Face parse_set(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw ParseError("expected a braced vertex set, got '" + text + "'");
    std::string body = t.substr(1, t.size() - 2);
    // accept both comma- and space-separated members
    for (auto& c : body)
        if (c == ',') c = ' ';
    auto tokens = split_tokens(body, ' ');
    if (tokens.empty()) throw ParseError("empty vertex set '" + text + "'");
    return make_face(std::move(tokens));
}

OrderedFacet parse_ordered(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("expected a parenthesized ordered facet, got '" + text + "'");
    auto tokens = split_tokens(t.substr(1, t.size() - 2), ' ');
    if (tokens.empty()) throw ParseError("empty ordered facet '" + text + "'");
    for (std::size_t i = 0; i < tokens.size(); ++i)
        for (std::size_t j = i + 1; j < tokens.size(); ++j)
            if (tokens[i] == tokens[j])
                throw ParseError("repeated vertex '" + tokens[i] + "' in ordered facet");
    return tokens;
}

}  // namespace simplexpaths
