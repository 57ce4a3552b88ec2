#include "colref/refine.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <json.hpp>

#include "colref/errors.hpp"

namespace colref {

namespace {

Partition initial_partition(const Graph& g, std::optional<Partition> initial) {
  if (g.order() == 0) fail(Errc::EmptyGraph, "refinement needs at least one vertex");
  if (initial) {
    if (!initial->covers(g.order())) fail(Errc::InvalidPartition, "initial partition does not cover the vertex set");
    return std::move(*initial);
  }
  if (g.colouring()) return Partition::from_colours(*g.colouring());
  return Partition::unit(g.order());
}

// Per-vertex signature for one synchronous round: sorted (class, count)
// pairs over the neighbourhood. The own class is compared separately.
using Signature = std::vector<std::pair<int, int>>;

Signature neighbour_signature(const Graph& g, const std::vector<int>& colour, int v,
                              std::vector<int>& scratch_count, std::vector<int>& scratch_touched) {
  for (int w : g.neighbours(v)) {
    if (scratch_count[colour[w]]++ == 0) scratch_touched.push_back(colour[w]);
  }
  Signature sig;
  sig.reserve(scratch_touched.size());
  for (int c : scratch_touched) {
    sig.emplace_back(c, scratch_count[c]);
    scratch_count[c] = 0;
  }
  scratch_touched.clear();
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Splits one class by neighbour signature; fragments come out with sorted
// members. Returns fragments in signature order (deterministic).
std::vector<std::vector<int>> split_class(const Graph& g, const std::vector<int>& colour,
                                          const std::vector<int>& members, std::vector<int>& scratch_count,
                                          std::vector<int>& scratch_touched) {
  std::map<Signature, std::vector<int>> groups;
  for (int v : members) {
    groups[neighbour_signature(g, colour, v, scratch_count, scratch_touched)].push_back(v);
  }
  std::vector<std::vector<int>> fragments;
  fragments.reserve(groups.size());
  for (auto& [sig, vs] : groups) fragments.push_back(std::move(vs));
  return fragments;
}

} // namespace

Partition refine_round(const Graph& g, const Partition& p) {
  if (!p.covers(g.order())) fail(Errc::InvalidPartition, "partition does not cover the vertex set");
  std::vector<int> colour = p.colour_of(g.order());
  std::vector<int> count(p.class_count(), 0);
  std::vector<int> touched;
  Partition next;
  for (const auto& members : p.classes) {
    for (auto& fragment : split_class(g, colour, members, count, touched)) {
      next.classes.push_back(std::move(fragment));
    }
  }
  next.normalise();
  return next;
}

namespace {

ColouringTrace run_reference(const Graph& g, Partition start) {
  ColouringTrace trace;
  trace.n = g.order();
  trace.rounds.push_back(std::move(start));
  while (true) {
    Partition next = refine_round(g, trace.rounds.back());
    bool stable = next == trace.rounds.back();
    trace.rounds.push_back(std::move(next));
    if (stable) break;
  }
  trace.wl1 = static_cast<int>(trace.rounds.size()) - 2;
  return trace;
}

// Split-driven engine. Classes adjacent to a class that split in the
// previous round are the only candidates for splitting in this one; splits
// within a round are applied together so round boundaries match the
// synchronous operator exactly.
ColouringTrace run_optimized(const Graph& g, Partition start) {
  const int n = g.order();
  ColouringTrace trace;
  trace.n = n;
  std::vector<int> colour = start.colour_of(n);
  trace.rounds.push_back(std::move(start));

  std::vector<int> count(n, 0);
  std::vector<int> touched;
  std::vector<char> affected; // candidate classes for this round
  bool first_round = true;
  std::vector<int> changed_vertices; // members of fragments from the previous round

  while (true) {
    const Partition& current = trace.rounds.back();
    const int k = current.class_count();
    count.assign(n, 0);

    affected.assign(k, 0);
    if (first_round) {
      std::fill(affected.begin(), affected.end(), 1);
      first_round = false;
    } else {
      for (int u : changed_vertices) {
        for (int w : g.neighbours(u)) affected[colour[w]] = 1;
      }
    }

    Partition next;
    changed_vertices.clear();
    bool any_split = false;
    for (int c = 0; c < k; ++c) {
      const auto& members = current.classes[c];
      if (!affected[c] || members.size() == 1) {
        next.classes.push_back(members);
        continue;
      }
      auto fragments = split_class(g, colour, members, count, touched);
      if (fragments.size() > 1) {
        any_split = true;
        for (auto& f : fragments) {
          for (int v : f) changed_vertices.push_back(v);
          next.classes.push_back(std::move(f));
        }
      } else {
        next.classes.push_back(std::move(fragments[0]));
      }
    }
    next.normalise();
    if (!any_split) {
      trace.rounds.push_back(trace.rounds.back());
      break;
    }
    colour = next.colour_of(n);
    trace.rounds.push_back(std::move(next));
  }
  trace.wl1 = static_cast<int>(trace.rounds.size()) - 2;
  return trace;
}

} // namespace

ColouringTrace run(const Graph& g, std::optional<Partition> initial, Engine engine) {
  Partition start = initial_partition(g, std::move(initial));
  return engine == Engine::Reference ? run_reference(g, std::move(start)) : run_optimized(g, std::move(start));
}

int wl1_iterations(const Graph& g) {
  return run(g, Partition::unit(g.order())).wl1;
}

bool is_long_refinement(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::EmptyGraph, "refinement needs at least one vertex");
  if (n == 1) return true;

  std::vector<int> colour(n, 0);
  std::vector<std::vector<int>> classes{std::vector<int>(n)};
  for (int v = 0; v < n; ++v) classes[0][v] = v;
  std::vector<int> count(n, 0);
  std::vector<int> touched;

  int k = 1;
  while (k < n) {
    // The round must split exactly one class, into exactly two fragments.
    int split_at = -1;
    std::vector<std::vector<int>> fragments;
    for (int c = 0; c < k; ++c) {
      if (classes[c].size() == 1) continue;
      auto f = split_class(g, colour, classes[c], count, touched);
      if (f.size() == 1) continue;
      if (split_at != -1 || f.size() > 2) return false;
      split_at = c;
      fragments = std::move(f);
    }
    if (split_at == -1) return false; // stabilised before the discrete partition
    classes[split_at] = std::move(fragments[0]);
    classes.push_back(std::move(fragments[1]));
    // Class ids only need to be distinct, not canonical.
    for (int v : classes.back()) colour[v] = k;
    ++k;
  }
  return true;
}

bool verify_equitable(const Graph& g, const Partition& p) {
  return refine_round(g, p) == p;
}

std::string trace_to_json(const ColouringTrace& trace, bool pretty) {
  nlohmann::json doc;
  doc["n"] = trace.n;
  doc["wl1"] = trace.wl1;
  doc["stable"] = trace.rounds.size() >= 2 &&
                  trace.rounds[trace.rounds.size() - 1] == trace.rounds[trace.rounds.size() - 2];
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& round : trace.rounds) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : round.classes) classes.push_back(c);
    rounds.push_back(std::move(classes));
  }
  doc["rounds"] = std::move(rounds);
  return pretty ? doc.dump(2) : doc.dump();
}

} // namespace colref
