#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace colref {

/// Simple undirected graph on vertex ids 0..n-1.
///
/// Adjacency lists are kept sorted and symmetric, with no self-loops and no
/// duplicates. Graphs are immutable after construction for all practical
/// purposes (the builders in this library construct and then never mutate),
/// so they can be shared freely across threads.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an unordered edge list. Duplicate edges are merged.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const;

  const std::vector<int>& neighbours(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  /// Inserts an edge, keeping lists sorted. Returns false if it was already
  /// present. Throws InvalidEdge on loops and OutOfRange on bad endpoints.
  bool add_edge(int u, int v);

  /// Optional initial vertex colouring (absent means monochromatic).
  const std::optional<std::vector<int>>& colouring() const { return colouring_; }
  void set_colouring(std::optional<std::vector<int>> colouring);

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::optional<std::vector<int>> colouring_;
};

/// Distinct degrees present in a graph plus their multiplicities.
struct DegreeSummary {
  std::vector<int> degrees;  // sorted, distinct
  std::map<int, int> counts; // degree -> number of vertices

  bool operator==(const DegreeSummary&) const = default;
  std::string to_string() const; // e.g. "{1:1, 5:11}"
};

DegreeSummary degree_summary(const Graph& g);

/// Edge-complement on the same vertex set. Involution.
Graph complement(const Graph& g);

/// True iff the graph has a single connected component (n <= 1 counts as
/// connected).
bool is_connected(const Graph& g);

/// Sorted edge list with u < v per pair.
std::vector<std::pair<int, int>> edge_list(const Graph& g);

/// Relabels vertices: vertex v becomes perm[v].
Graph relabelled(const Graph& g, const std::vector<int>& perm);

} // namespace colref
