#include <doctest.h>

#include <set>

#include "colref/codec.hpp"
#include "colref/errors.hpp"
#include "colref/families.hpp"
#include "colref/refine.hpp"
#include "colref/stream.hpp"
#include "fixtures.hpp"

using namespace colref;

TEST_CASE("refine_round splits P3 by degree") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Partition next = refine_round(p3, Partition::unit(3));
  CHECK(next.classes == std::vector<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("refine_round keeps regular graphs whole") {
  Graph c6 = fixtures::cycle(6);
  CHECK(refine_round(c6, Partition::unit(6)) == Partition::unit(6));
}

TEST_CASE("refine_round on the first code graph splits off the degree-2 pair") {
  Graph g = build_graph(parse_code("S011XX"));
  Partition next = refine_round(g, Partition::unit(12));
  REQUIRE(next.class_count() == 2);
  std::multiset<std::size_t> sizes{next.classes[0].size(), next.classes[1].size()};
  CHECK(sizes == std::multiset<std::size_t>{2, 10});
}

TEST_CASE("refine_round validates the partition") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Partition bad;
  bad.classes = {{0, 1}}; // misses vertex 2
  CHECK_THROWS_AS(refine_round(p3, bad), Error);
}

TEST_CASE("run produces a monotone trace ending in two equal rounds") {
  for (int i = 0; i < 40; ++i) {
    Graph g = random_gnp(1 + i % 25, 0.4, 17 + i);
    ColouringTrace t = run(g);
    REQUIRE(t.rounds.size() >= 2);
    CHECK(t.wl1 == static_cast<int>(t.rounds.size()) - 2);
    CHECK(t.rounds[t.rounds.size() - 1] == t.rounds[t.rounds.size() - 2]);
    for (std::size_t r = 1; r < t.rounds.size(); ++r) {
      CHECK(t.rounds[r].refines(t.rounds[r - 1]));
      if (r + 1 < t.rounds.size()) CHECK(t.rounds[r] != t.rounds[r - 1]);
    }
    CHECK(t.wl1 <= g.order() - 1);
  }
}

TEST_CASE("run rejects the empty graph") {
  CHECK_THROWS_AS(run(Graph::from_edges(0, {})), Error);
  CHECK_THROWS_AS(wl1_iterations(Graph::from_edges(0, {})), Error);
}

TEST_CASE("paths stabilise after floor((n-1)/2) rounds") {
  CHECK(wl1_iterations(path_graph(5)) == 2);
  CHECK(wl1_iterations(path_graph(2)) == 0);
  CHECK(wl1_iterations(path_graph(7)) == 3);
  CHECK(wl1_iterations(path_graph(100)) == 49);
}

TEST_CASE("fixed iteration counts") {
  CHECK(wl1_iterations(fixtures::complete(4)) == 0);
  CHECK(wl1_iterations(fixtures::degree15_graph()) == 11);
  CHECK(wl1_iterations(fixtures::degree13_graph()) == 13);
  CHECK(wl1_iterations(Graph::from_edges(1, {})) == 0);
  CHECK(wl1_iterations(build_graph(parse_code("S00X1X0"))) == 13);
  CHECK(wl1_iterations(build_graph(parse_code("S11100111X1X1110"))) == 31);
}

TEST_CASE("single vertex counts as long-refinement") {
  CHECK(is_long_refinement(Graph::from_edges(1, {})));
}

TEST_CASE("long-refinement predicate matches the definition") {
  CHECK(!is_long_refinement(fixtures::cycle(6)));
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!is_long_refinement(two_triangles));
  CHECK(is_long_refinement(build_graph(parse_code("S011XX"))));
  for (int i = 0; i < 400; ++i) {
    Graph g = random_gnp(1 + i % 12, (i % 9 + 1) / 10.0, 37 + i);
    CHECK(is_long_refinement(g) == (run(g, Partition::unit(g.order()), Engine::Reference).wl1 ==
                                    g.order() - 1));
  }
}

TEST_CASE("long-refinement graphs add exactly one class per round") {
  Graph g = build_graph(parse_code("S011XX"));
  ColouringTrace t = run(g);
  for (std::size_t r = 0; r + 2 < t.rounds.size(); ++r) {
    CHECK(t.rounds[r + 1].class_count() == t.rounds[r].class_count() + 1);
  }
  CHECK(t.rounds[t.rounds.size() - 2].is_discrete());
}

TEST_CASE("two distinct degrees are necessary for long refinement") {
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(2 + i % 10, 0.5, 71 + i);
    if (is_long_refinement(g)) CHECK(degree_summary(g).degrees.size() == 2);
  }
  CHECK(degree_summary(build_graph(parse_code("S011XX"))).degrees.size() == 2);
}

TEST_CASE("engines produce identical rounds") {
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 60;
    double p = (i % 3 == 0) ? 0.05 : (i % 3 == 1) ? 0.5 : 0.95;
    Graph g = random_gnp(n, p, 1000 + i);
    auto a = run(g, std::nullopt, Engine::Reference);
    auto b = run(g, std::nullopt, Engine::Optimized);
    CHECK(a.wl1 == b.wl1);
    CHECK(a.rounds == b.rounds);
  }
}

TEST_CASE("isomorphism invariance of traces") {
  for (int i = 0; i < 60; ++i) {
    Graph g = random_gnp(2 + i % 20, 0.4, 5 + i);
    Graph h = random_relabelling(g, 77 + i);
    auto tg = run(g);
    auto th = run(h);
    CHECK(tg.wl1 == th.wl1);
    for (std::size_t r = 0; r < tg.rounds.size(); ++r) {
      std::multiset<std::size_t> sg, sh;
      for (const auto& c : tg.rounds[r].classes) sg.insert(c.size());
      for (const auto& c : th.rounds[r].classes) sh.insert(c.size());
      CHECK(sg == sh);
    }
  }
}

TEST_CASE("complement invariance of every round") {
  for (int i = 0; i < 100; ++i) {
    Graph g = random_gnp(1 + i % 30, 0.5, 3000 + i);
    auto tg = run(g);
    auto tc = run(complement(g));
    CHECK(tg.wl1 == tc.wl1);
    CHECK(tg.rounds == tc.rounds);
    CHECK(is_long_refinement(g) == is_long_refinement(complement(g)));
  }
}

TEST_CASE("initial colourings seed the partition") {
  Graph c6 = fixtures::cycle(6);
  std::vector<int> colours{0, 1, 1, 1, 1, 1};
  c6.set_colouring(colours);
  ColouringTrace t = run(c6);
  CHECK(t.initial().class_count() == 2);
  CHECK(t.wl1 == 2); // distances from the marked vertex
  Partition custom;
  custom.classes = {{0}, {1, 2, 3, 4, 5}};
  CHECK(run(fixtures::cycle(6), custom).wl1 == 2);
}

TEST_CASE("verify_equitable") {
  Graph c6 = fixtures::cycle(6);
  CHECK(verify_equitable(c6, Partition::unit(6)));
  CHECK(verify_equitable(c6, Partition::discrete(6)));
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(!verify_equitable(p3, Partition::unit(3)));
  CHECK(verify_equitable(p3, run(p3).stable()));
}

TEST_CASE("trace serialization carries the fields") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  std::string doc = trace_to_json(run(p3));
  CHECK(doc.find("\"n\":3") != std::string::npos);
  CHECK(doc.find("\"wl1\":1") != std::string::npos);
  CHECK(doc.find("\"stable\":true") != std::string::npos);
  CHECK(doc.find("\"rounds\"") != std::string::npos);
}

TEST_CASE("random graphs stabilise almost surely within two rounds") {
  int quick = 0;
  const int samples = 200;
  for (int i = 0; i < samples; ++i) {
    if (run(random_gnp(100, 0.5, 424200 + i)).wl1 <= 2) ++quick;
  }
  CHECK(quick >= samples * 95 / 100);
}
