#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colref/graph.hpp"

namespace colref {

enum class Letter : std::uint8_t { Zero, One, S, X };

/// String encoding of a long-refinement graph with degrees 2 and 3.
///
/// Positions are 1-based to match the textual form: position 1 is always S,
/// exactly two positions carry X, and at most one position (a ONE or X
/// letter, never position 1) carries a hat mark. Textually a hat is a '^'
/// immediately after its letter, e.g. "S1^11XX" or "S0X1X^".
struct Code {
  std::vector<Letter> letters; // letters[0] is position 1
  int hat = 0;                 // 1-based hatted position, 0 if none

  int length() const { return static_cast<int>(letters.size()); }
  bool has_hat() const { return hat != 0; }
  Letter at(int pos) const { return letters[pos - 1]; } // 1-based

  bool operator==(const Code&) const = default;
};

/// Parses the textual grammar; throws CodeError (with a 1-based position in
/// the message) on violations of the structural invariants.
Code parse_code(std::string_view text);

/// Inverse of parse_code on normalised text.
std::string render_code(const Code& code);

/// Re-checks the structural invariants of a hand-built Code value.
void validate_code(const Code& code);

/// Number of vertices of the encoded graph: twice the length, plus one for
/// a hat.
int code_order(const Code& code);

/// Builds the encoded graph with fixed vertex numbering: the pair at
/// position i maps to 2(i-1) and 2(i-1)+1, a hat vertex comes last. Pairs at
/// consecutive positions are joined by matchings, ONE pairs get their intra
/// edge, the two X pairs attach to the first and second vertex of the S
/// pair, and the terminal pair is completed to the degree its letter
/// declares. A hatted pair has its intra edge subdivided by the hat vertex.
/// Throws NotRealizable when the rules would need a duplicate edge or leave
/// a vertex short of its declared degree.
Graph build_graph(const Code& code);

/// Recovers the code of a graph built from one (up to isomorphism). Runs
/// refinement, locates the round consisting of pairs (plus at most one
/// singleton), reads the splitting order off the trace and classifies each
/// pair. Throws NotEncodable when the graph is outside the encoding's
/// assumptions and StructureError when the pair structure is inconsistent.
Code decode_graph(const Graph& g);

std::string letter_to_string(Letter l);

} // namespace colref
