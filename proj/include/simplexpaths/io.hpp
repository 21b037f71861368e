#pragma once

#include <iosfwd>
#include <string>

#include "simplexpaths/complex.hpp"
#include "simplexpaths/generators.hpp"

namespace simplexpaths {

/// Facet-list text format: one facet per line, labels separated by spaces,
/// '#' starts a comment line, blank lines ignored. Throws ParseError on
/// malformed tokens and the usual construction errors otherwise.
Complex parse_facet_list(std::istream& in);
Complex parse_facet_list_file(const std::string& path);

/// Canonical emission: vertices sorted within a line, lines sorted.
std::string emit_canonical(const Complex& C);
void write_facet_list_file(const Complex& C, const std::string& path);

/// JSON sidecar describing a generated marked complex.
std::string marked_sidecar_json(const MarkedComplex& mc, const std::string& kind,
                                const std::string& params);

}  // namespace simplexpaths
