#include <doctest.h>

#include <algorithm>
#include <set>

#include "canon_internal.hpp"
#include "colref/canonical.hpp"
#include "colref/codec.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"
#include "colref/stream.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace colref;

TEST_CASE("canonical code is invariant under relabelling") {
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(1 + i % 14, (1 + i % 9) / 10.0, 9000 + i);
    std::string code = canonical_code(g);
    for (unsigned s = 0; s < 4; ++s) {
      CHECK(canonical_code(random_relabelling(g, 100 * i + s)) == code);
    }
  }
}

TEST_CASE("canonical codes separate non-isomorphic graphs (brute-checked)") {
  // Equality of codes must coincide with brute-force isomorphism.
  std::vector<Graph> pool;
  for (int i = 0; i < 30; ++i) pool.push_back(random_gnp(6, 0.5, 40 + i));
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      bool same_code = canonical_code(pool[a]) == canonical_code(pool[b]);
      CHECK(same_code == oracles::brute_isomorphic(pool[a], pool[b]));
    }
  }
}

TEST_CASE("named examples") {
  Graph c5 = fixtures::cycle(5);
  CHECK(canonical_code(c5) == canonical_code(random_relabelling(c5, 3)));
  CHECK(canonical_code(c5) == canonical_code(complement(c5)));
  CHECK(oracles::brute_isomorphic(c5, complement(c5)));
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_code(p4) != canonical_code(star));
  CHECK(are_isomorphic(c5, complement(c5)));
  CHECK(!are_isomorphic(p4, star));
}

TEST_CASE("canonical code of a decoded graph is parseable graph6") {
  Graph g = build_graph(parse_code("S011XX"));
  Graph h = graph6_decode(canonical_code(g));
  CHECK(h.order() == 12);
  CHECK(oracles::brute_isomorphic(Graph::from_edges(8, {}), Graph::from_edges(8, {})));
}

TEST_CASE("automorphism search finds exact orbits") {
  using namespace colref::detail;
  // C5: vertex-transitive, one orbit
  auto c5 = BitGraph::from_graph(fixtures::cycle(5));
  auto out = automorphism_search(c5);
  for (int v = 1; v < 5; ++v) CHECK(out.orbits.same(0, v));

  // P4: ends pair up, middles pair up
  auto p4 = BitGraph::from_graph(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  auto outp = automorphism_search(p4);
  CHECK(outp.orbits.same(0, 3));
  CHECK(outp.orbits.same(1, 2));
  CHECK(!outp.orbits.same(0, 1));

  // rigid graph: no generators
  Graph rigid = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {0, 3}});
  auto outr = automorphism_search(BitGraph::from_graph(rigid));
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) CHECK(!outr.orbits.same(u, v));
  }
}

TEST_CASE("automorphism generators are automorphisms") {
  using namespace colref::detail;
  for (int i = 0; i < 100; ++i) {
    Graph g = random_gnp(2 + i % 9, 0.5, 60 + i);
    auto b = BitGraph::from_graph(g);
    auto out = automorphism_search(b);
    for (const auto& perm : out.generators) {
      for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
          CHECK(g.adjacent(u, v) == g.adjacent(perm[u], perm[v]));
        }
      }
    }
  }
}

TEST_CASE("orbit counts match a brute-force orbit computation") {
  using namespace colref::detail;
  // Brute force: orbits of the full automorphism group found by trying all
  // permutations.
  for (int i = 0; i < 60; ++i) {
    Graph g = random_gnp(2 + i % 7, (1 + i % 8) / 9.0, 700 + i);
    const int n = g.order();
    UnionFind brute(n);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    do {
      bool iso = true;
      for (int u = 0; u < n && iso; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) {
            iso = false;
            break;
          }
        }
      }
      if (iso) {
        for (int v = 0; v < n; ++v) brute.unite(v, perm[v]);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto out = automorphism_search(BitGraph::from_graph(g));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        CHECK(out.orbits.same(u, v) == brute.same(u, v));
      }
    }
  }
}

TEST_CASE("vertex_equivalent agrees with orbits") {
  using namespace colref::detail;
  auto p4 = BitGraph::from_graph(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(vertex_equivalent(p4, 0, 3));
  CHECK(vertex_equivalent(p4, 1, 2));
  CHECK(!vertex_equivalent(p4, 0, 1));
}

TEST_CASE("cut vertices") {
  using namespace colref::detail;
  // path: interior vertices are cuts
  auto p4 = BitGraph::from_graph(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
  auto cut = cut_vertices(p4);
  CHECK(cut == std::vector<char>{0, 1, 1, 0});
  // cycle: none
  auto c5 = BitGraph::from_graph(fixtures::cycle(5));
  cut = cut_vertices(c5);
  CHECK(std::count(cut.begin(), cut.end(), 1) == 0);
  // two triangles sharing a vertex
  auto bowtie =
      BitGraph::from_graph(Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}));
  cut = cut_vertices(bowtie);
  CHECK(cut == std::vector<char>{0, 0, 1, 0, 0});
}

TEST_CASE("bit-level long-refinement test matches the engine") {
  using namespace colref::detail;
  for (int i = 0; i < 500; ++i) {
    Graph g = random_gnp(1 + i % 11, (1 + i % 9) / 10.0, 81000 + i);
    CHECK(bit_is_long_refinement(BitGraph::from_graph(g)) == is_long_refinement(g));
  }
  CHECK(bit_is_long_refinement(BitGraph::from_graph(build_graph(parse_code("S011XX")))));
}
