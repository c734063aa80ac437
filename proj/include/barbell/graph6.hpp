#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "barbell/graph.hpp"

namespace barbell {

// graph6 text codec (the compact printable encoding used by nauty/geng).
// parse accepts an optional ">>graph6<<" header and tolerates surrounding
// whitespace; encode emits the canonical minimal-length form, so
// encode(parse(x)) == x for canonically encoded input.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Edge-list format: an optional first line holding the vertex count, then one
// 1-based "u v" pair per line.  Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace barbell
