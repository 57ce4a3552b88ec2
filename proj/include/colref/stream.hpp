#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "colref/graph.hpp"

namespace colref {

struct FilterStats {
  std::uint64_t scanned = 0;
  std::uint64_t matched = 0;
  std::uint64_t malformed = 0;
  std::map<std::string, std::uint64_t> degree_histogram; // of matches

  std::string report() const;
};

/// Reads newline-separated graph6 lines and echoes exactly the
/// long-refinement ones to `matches`. Malformed lines are reported with
/// their line number on `diagnostics` and skipped; in strict mode they abort
/// with FormatError instead.
FilterStats filter_stream(std::istream& in, std::ostream& matches, std::ostream* diagnostics,
                          bool strict = false);

/// Erdos-Renyi G(n, p) sample, reproducible from the seed.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Uniformly random relabelling of g, reproducible from the seed.
Graph random_relabelling(const Graph& g, std::uint64_t seed);

} // namespace colref
