#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colref/graph.hpp"
#include "colref/partition.hpp"

namespace colref {

/// Encodes a graph in graph6 (6-bit groups offset by 63, N(n) size prefix).
/// The encoding is bit-exact: decode(encode(g)) reproduces the adjacency.
std::string graph6_encode(const Graph& g);

/// Decodes graph6 text. A leading ">>graph6<<" header is accepted, trailing
/// whitespace/newline is ignored. Throws FormatError on malformed input.
Graph graph6_decode(std::string_view text);

/// Splits newline-separated graph6 text into one graph per line, skipping
/// blank lines.
std::vector<Graph> graph6_decode_lines(std::string_view text);

/// GraphViz text export. When a partition is given, its classes are rendered
/// as fill colours.
std::string dot_export(const Graph& g, const Partition* partition = nullptr);

} // namespace colref
