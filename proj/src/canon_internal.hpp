#pragma once

// Internals shared by the canonical-labelling engine and the isomorph-free
// generator: packed adjacency rows, ordered partitions, equitable
// refinement, and the two tree searches (canonical leaf, automorphism
// generators).

#include <cstdint>
#include <numeric>
#include <vector>

#include "colref/graph.hpp"

namespace colref::detail {

struct BitGraph {
  int n = 0;
  int w = 1; // 64-bit words per adjacency row
  std::vector<std::uint64_t> bits;

  BitGraph() = default;
  explicit BitGraph(int n_) : n(n_), w(n_ <= 64 ? 1 : (n_ + 63) / 64), bits(static_cast<std::size_t>(n_) * w, 0) {}

  std::uint64_t* row(int v) { return bits.data() + static_cast<std::size_t>(v) * w; }
  const std::uint64_t* row(int v) const { return bits.data() + static_cast<std::size_t>(v) * w; }

  void add_edge(int u, int v) {
    row(u)[v >> 6] |= 1ull << (v & 63);
    row(v)[u >> 6] |= 1ull << (u & 63);
  }
  bool adjacent(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
  int degree(int v) const;

  static BitGraph from_graph(const Graph& g);
  Graph to_graph() const;
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n = 0) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool same(int a, int b) { return find(a) == find(b); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

/// Ordered partition in lab/ptn form: lab lists the vertices, ptn[i] == 0
/// marks the end of a cell at position i.
struct OPart {
  std::vector<int> lab;
  std::vector<int> pos; // pos[v] = index of v in lab
  std::vector<int> ptn;
  int cells = 0;

  void init_unit(int n);
  void init_cells(int n, const std::vector<std::vector<int>>& cells_in);
  int n() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return cells == n(); }
  /// Start position of the first smallest non-singleton cell.
  int target_cell(int& size_out) const;
  /// Moves v to the front of the cell starting at `start` and splits it off
  /// as a singleton.
  void individualize(int start, int v);
};

/// Equitable refinement with a splitter queue of cell start positions.
/// Returns a label-invariant node invariant folding in every split event
/// and the final cell shape.
std::uint64_t refine(const BitGraph& g, OPart& p, std::vector<int> queue);

/// Refinement from the unit partition (or the given initial cells).
OPart stable_refine(const BitGraph& g, const std::vector<std::vector<int>>* initial_cells = nullptr);

struct CanonOutcome {
  std::vector<int> lab;            // lab[i] = vertex at canonical position i
  std::vector<std::uint64_t> code; // packed canonical adjacency bits
  UnionFind orbits;                // sound automorphism merges (may be partial)
  std::vector<int> root_cell;      // root equitable cell start per vertex
};

/// Backtracking canonical-labelling search (refinement plus
/// individualization). `initial_cells` orders any vertex colouring; the
/// default is the unit partition.
CanonOutcome canonical_search(const BitGraph& g, const std::vector<std::vector<int>>* initial_cells = nullptr);

struct AutOutcome {
  std::vector<std::vector<int>> generators; // generators[k][v] = image of v
  UnionFind orbits;                         // exact orbit partition
};

/// Exact automorphism generators: recursive stabilizer generators plus one
/// link per equivalent target-cell vertex.
AutOutcome automorphism_search(const BitGraph& g);

/// True iff some automorphism maps a to b (decided by two marked canonical
/// runs; exact).
bool vertex_equivalent(const BitGraph& g, int a, int b);

/// cut[v] = 1 iff v is an articulation point.
std::vector<char> cut_vertices(const BitGraph& g);

/// Early-abort long-refinement test on packed rows (n <= 64): every round
/// must grow the partition by exactly one class until it is discrete.
bool bit_is_long_refinement(const BitGraph& g);

} // namespace colref::detail
