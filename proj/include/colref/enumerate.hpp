#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colref/graph.hpp"

namespace colref {

/// What to generate and which filters to apply at the target order.
struct SearchConstraints {
  int order = 1;
  bool connected_only = false;
  /// Exact distinct-degree set required of emitted graphs (final filter).
  std::optional<std::vector<int>> degree_set;
  /// Upper degree bound. A final filter by default; with prune_by_degree it
  /// also prunes augmentation (validated against unpruned runs).
  std::optional<int> max_degree;
  bool prune_by_degree = false;
  /// Keep only long-refinement graphs (early-abort filter, survivors
  /// re-confirmed with the reference engine).
  bool long_refinement_only = false;
};

struct SearchStats {
  std::uint64_t candidates = 0; // augmentation candidates tested
  std::uint64_t generated = 0;  // isomorphism classes of the target order
  std::uint64_t emitted = 0;    // graphs that passed all filters
  double seconds = 0.0;
};

/// Isomorph-free exhaustive generation by canonical augmentation: the
/// visitor sees exactly one representative per isomorphism class satisfying
/// the constraints. With jobs > 1, subtrees run on worker threads and
/// visitor calls happen after a deterministic merge (sorted by canonical
/// code); results are independent of the job count.
SearchStats enumerate_graphs(const SearchConstraints& constraints,
                             const std::function<void(const Graph&)>& visitor, int jobs = 1);

struct LongRefinementCount {
  std::uint64_t scanned_classes = 0;
  std::vector<std::string> graph6; // canonical forms, sorted
  SearchStats stats;
};

/// Counts (and lists) the long-refinement graphs of order n across all
/// isomorphism classes, or under extra constraints.
LongRefinementCount count_long_refinement(int n, SearchConstraints base = {}, int jobs = 1);

} // namespace colref
