#pragma once

#include <string>
#include <string_view>

#include "ricci/graph.hpp"

namespace ricci {

// graph6: order in 1, 4 or 8 bytes, then the upper triangle in column order
// (0,1) (0,2) (1,2) (0,3) ... packed six bits per byte, each byte offset by
// 63. An optional ">>graph6<<" header and trailing whitespace are accepted.
// Throws ParseError with the byte offset of the first bad character.
Graph graph6_decode(std::string_view line);
std::string graph6_encode(const Graph& g);

// "n m" on the first line, then m lines "u v". Blank lines and lines
// starting with '#' are ignored. Throws ParseError with a 1-based line number.
Graph edge_list_parse(std::string_view text);
std::string edge_list_write(const Graph& g);

}  // namespace ricci
