#pragma once

// Shared test fixtures: the two published adjacency-list graphs plus small
// named graphs.

#include "colref/graph.hpp"

namespace colref::fixtures {

// 12 vertices, degrees {1,5}, stabilises after 11 rounds.
inline Graph degree15_graph() {
  return Graph::from_edges(
      12, {{0, 1},  {1, 2},  {1, 3},  {1, 4},  {1, 5},  {2, 3},  {2, 5},  {2, 7},  {2, 10}, {3, 4},
           {3, 6},  {3, 10}, {4, 5},  {4, 9},  {4, 11}, {5, 8},  {5, 11}, {6, 7},  {6, 8},  {6, 9},
           {6, 11}, {7, 8},  {7, 9},  {7, 10}, {8, 10}, {8, 11}, {9, 10}, {9, 11}});
}

// 14 vertices, degrees {1,3}, stabilises after 13 rounds.
inline Graph degree13_graph() {
  return Graph::from_edges(14, {{0, 1},
                                {1, 2},
                                {1, 3},
                                {2, 11},
                                {2, 13},
                                {3, 10},
                                {3, 12},
                                {4, 5},
                                {4, 7},
                                {4, 10},
                                {5, 6},
                                {5, 10},
                                {6, 9},
                                {6, 11},
                                {7, 8},
                                {7, 11},
                                {8, 9},
                                {8, 13},
                                {9, 12},
                                {12, 13}});
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

} // namespace colref::fixtures
