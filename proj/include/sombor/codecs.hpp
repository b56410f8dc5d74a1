#pragma once

#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

// graph6: compact text encoding of simple undirected graphs. This codec
// covers the small-graph range n <= 62 (single size byte), bit-exact per the
// published format: size byte n+63, then the upper triangle of the adjacency
// matrix in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian into 6-bit groups, each +63, zero-padded.
std::string encode_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing newline. Throws
// parse_error with the byte offset of the offending character; throws
// unsupported_size_error for the multi-byte size forms (n > 62).
Graph decode_graph6(std::string_view text);

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// vertex ids, whitespace separated. '#' starts a comment that runs to end of
// line; blank lines are ignored.
std::string encode_edge_list(const Graph& g);

// Throws parse_error carrying the 1-based line number.
Graph decode_edge_list(std::string_view text);

} // namespace sombor
