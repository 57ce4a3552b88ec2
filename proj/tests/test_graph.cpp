#include <doctest.h>

#include "colref/errors.hpp"
#include "colref/graph.hpp"
#include "colref/graph6.hpp"
#include "colref/stream.hpp"
#include "fixtures.hpp"

using namespace colref;

TEST_CASE("from_edges builds sorted symmetric adjacency") {
  Graph g = Graph::from_edges(3, {{1, 0}, {1, 2}, {0, 1}});
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbours(1) == std::vector<int>{0, 2});
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 2));
  auto summary = degree_summary(g);
  CHECK(summary.degrees == std::vector<int>{1, 2});
}

TEST_CASE("single vertex and empty graphs") {
  Graph one = Graph::from_edges(1, {});
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
  Graph zero = Graph::from_edges(0, {});
  CHECK(zero.order() == 0);
}

TEST_CASE("edge validation") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
  try {
    Graph::from_edges(2, {{1, 1}});
    FAIL("expected InvalidEdge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidEdge);
  }
  try {
    Graph::from_edges(2, {{0, 5}});
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfRange);
  }
}

TEST_CASE("published adjacency fixtures have the stated degree summaries") {
  auto left = degree_summary(fixtures::degree15_graph());
  CHECK(left.counts == std::map<int, int>{{1, 1}, {5, 11}});
  auto right = degree_summary(fixtures::degree13_graph());
  CHECK(right.counts == std::map<int, int>{{1, 1}, {3, 13}});
}

TEST_CASE("complement is an involution and splits the edge total") {
  Graph k4 = fixtures::complete(4);
  CHECK(complement(k4).edge_count() == 0);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_gnp(1 + i % 17, 0.4, 500 + i);
    Graph c = complement(g);
    CHECK(complement(c) == g);
    CHECK(g.edge_count() + c.edge_count() ==
          static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2);
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Graph::from_edges(0, {})));
  CHECK(is_connected(Graph::from_edges(1, {})));
  CHECK(is_connected(fixtures::cycle(5)));
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!is_connected(two_triangles));
}

TEST_CASE("degree_summary of P4") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto summary = degree_summary(p4);
  CHECK(summary.counts == std::map<int, int>{{1, 2}, {2, 2}});
}

TEST_CASE("relabelled applies a permutation") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph r = relabelled(p3, {2, 0, 1}); // 0->2, 1->0, 2->1
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK(!r.adjacent(2, 1));
}
