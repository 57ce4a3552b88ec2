#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colref/graph.hpp"
#include "colref/partition.hpp"

namespace colref {

/// Which refinement engine computes a trace. Both produce identical
/// per-round partitions; Reference recomputes every class each round and
/// serves as the oracle, Optimized only revisits classes next to a split.
enum class Engine { Reference, Optimized };

/// Full refinement history: partitions pi^0 .. pi^{wl1+1}. The last two
/// rounds are equal (the confirming round is stored) and no earlier
/// adjacent pair is.
struct ColouringTrace {
  int n = 0;
  int wl1 = 0;
  std::vector<Partition> rounds;

  const Partition& initial() const { return rounds.front(); }
  const Partition& stable() const { return rounds.back(); }
};

/// One synchronous refinement round: vertices stay together iff they share a
/// class and have equal multisets of neighbour classes.
Partition refine_round(const Graph& g, const Partition& p);

/// Runs refinement to stabilisation. The initial partition defaults to the
/// one induced by the graph's colouring, or the unit partition for
/// monochromatic graphs. Throws EmptyGraph for n = 0.
ColouringTrace run(const Graph& g, std::optional<Partition> initial = std::nullopt,
                   Engine engine = Engine::Optimized);

/// Iterations to stabilisation from the monochromatic start.
int wl1_iterations(const Graph& g);

/// True iff refinement from the monochromatic start takes order-1 rounds.
/// Aborts as soon as a round gains two or more classes or stabilises early;
/// the result always equals the definitional predicate.
bool is_long_refinement(const Graph& g);

/// True iff the partition is stable under refinement, i.e. every class
/// induces a regular subgraph and every class pair a biregular one.
bool verify_equitable(const Graph& g, const Partition& p);

/// Structured-text form of a trace: fields n, wl1, stable, rounds.
std::string trace_to_json(const ColouringTrace& trace, bool pretty = false);

} // namespace colref
