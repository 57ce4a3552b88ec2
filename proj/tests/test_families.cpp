#include <doctest.h>

#include <map>
#include <set>

#include "colref/codec.hpp"
#include "colref/errors.hpp"
#include "colref/families.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"
#include "fixtures.hpp"

using namespace colref;

TEST_CASE("family member strings") {
  CHECK(render_code(family_member(FamilyId::E1, 0)) == "S011XX");
  CHECK(render_code(family_member(FamilyId::E2, 0)) == "S00X1X0");
  CHECK(render_code(family_member(FamilyId::E2, 3)) == "S11100111X1X1110");
  CHECK(render_code(family_member(FamilyId::O1, 0)) == "S1^11XX");
  CHECK(render_code(family_member(FamilyId::O2, -1)) == "S0X1X^");
  CHECK(render_code(family_member(FamilyId::O3, -1)) == "S110XX^");
}

TEST_CASE("invalid members are rejected") {
  CHECK_THROWS_AS(family_member(FamilyId::E1, 1), Error);
  CHECK_THROWS_AS(family_member(FamilyId::O1, -1), Error);
  CHECK_THROWS_AS(family_member(FamilyId::E2, -1), Error);
  CHECK_THROWS_AS(family_member(FamilyId::E2, -3), Error);
  CHECK_THROWS_AS(family_from_name("E9"), Error);
  CHECK(family_from_name("O5") == FamilyId::O5);
}

TEST_CASE("closed order forms") {
  for (int k = 0; k <= 8; ++k) {
    CHECK(code_order(family_member(FamilyId::E2, k)) == 6 * k + 14);
    CHECK(code_order(family_member(FamilyId::E3, k)) == 6 * k + 16);
    CHECK(code_order(family_member(FamilyId::E4, k)) == 6 * k + 16);
    CHECK(code_order(family_member(FamilyId::E5, k)) == 18 * k + 18);
    CHECK(code_order(family_member(FamilyId::E6, k)) == 18 * k + 18);
    CHECK(code_order(family_member(FamilyId::O2, k)) == 6 * k + 17);
    CHECK(code_order(family_member(FamilyId::O3, k)) == 6 * k + 19);
    CHECK(code_order(family_member(FamilyId::O4, k)) == 6 * k + 13);
    CHECK(code_order(family_member(FamilyId::O5, k)) == 18 * k + 15);
  }
  CHECK(code_order(family_member(FamilyId::E1, 0)) == 12);
  CHECK(code_order(family_member(FamilyId::O1, 0)) == 13);
  CHECK(code_order(family_member(FamilyId::O2, -1)) == 11);
  CHECK(code_order(family_member(FamilyId::O3, -1)) == 13);
}

TEST_CASE("every catalogued member is long-refinement (k <= 5)") {
  for (const auto& entry : catalogue(5)) {
    Graph g = build_graph(entry.code);
    CHECK(g.order() == entry.order);
    CHECK(is_long_refinement(g));
    auto summary = degree_summary(g);
    CHECK(summary.degrees == std::vector<int>{2, 3});
  }
}

TEST_CASE("catalogue round-trips through the decoder (k <= 3)") {
  for (const auto& entry : catalogue(3)) {
    CHECK(decode_graph(build_graph(entry.code)) == entry.code);
  }
}

TEST_CASE("the first odd family has exactly three degree-2 vertices") {
  for (int k : {-1, 0, 1, 2}) {
    Graph g = build_graph(family_member(FamilyId::O2, k));
    CHECK(degree_summary(g).counts.at(2) == 3);
  }
}

TEST_CASE("coverage: family orders hit every feasible order") {
  // Orders in [10, 6K+13] are covered by the members (k <= K), the order-10
  // fixture, or an apex extension of the E2 member one below, exactly when
  // n = 12 or n mod 18 is outside {6,12}.
  const int max_k = 8;
  std::set<int> orders{10};
  std::set<int> apex_orders;
  for (const auto& entry : catalogue(max_k)) {
    orders.insert(entry.order);
    if (entry.family == FamilyId::E2) apex_orders.insert(entry.order + 1);
  }
  for (int n = 10; n <= 6 * max_k + 13; ++n) {
    bool feasible = n == 12 || (n % 18 != 6 && n % 18 != 12);
    bool covered = orders.count(n) || (n % 2 == 1 && apex_orders.count(n));
    CHECK(covered == feasible);
  }
}

TEST_CASE("path_graph") {
  CHECK(path_graph(1).order() == 1);
  CHECK(path_graph(2).edge_count() == 1);
  CHECK_THROWS_AS(path_graph(0), Error);
}

TEST_CASE("apex extension") {
  Graph base = build_graph(parse_code("S00X1X0"));
  Graph extended = apex_extension(base, 2);
  CHECK(extended.order() == 15);
  CHECK(wl1_iterations(extended) == 14);
  CHECK_THROWS_AS(apex_extension(fixtures::cycle(6), 2), Error);
  // every E2 member has six degree-2 vertices, never three
  for (int k = 0; k <= 3; ++k) {
    Graph g = build_graph(family_member(FamilyId::E2, k));
    CHECK(degree_summary(g).counts.at(2) == 6);
    Graph ext = apex_extension(g, 2);
    CHECK(is_long_refinement(ext));
  }
  // three degree-2 vertices would make the result regular
  Graph o2 = build_graph(family_member(FamilyId::O2, -1));
  try {
    apex_extension(o2, 2);
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotApplicable);
  }
}

TEST_CASE("add_isolated") {
  Graph g = add_isolated(build_graph(parse_code("S011XX")));
  CHECK(g.order() == 13);
  CHECK(wl1_iterations(g) == 11);
  CHECK_THROWS_AS(add_isolated(fixtures::complete(3)), Error);
}

TEST_CASE("degree-1 transform drops a single degree-1 vertex") {
  Graph g = degree1_transform(fixtures::degree13_graph());
  CHECK(g.order() == 13);
  CHECK(degree_summary(g).degrees == std::vector<int>{2, 3});
  CHECK(is_long_refinement(g));
  CHECK_THROWS_AS(degree1_transform(path_graph(4)), Error);
  CHECK_THROWS_AS(degree1_transform(fixtures::degree15_graph()), Error);
}

TEST_CASE("embedded fixtures verify") {
  Graph ten = embedded_fixture(10);
  CHECK(ten.order() == 10);
  CHECK(is_long_refinement(ten));
  Graph eleven = embedded_fixture(11);
  CHECK(eleven.order() == 11);
  CHECK(is_long_refinement(eleven));
  CHECK_THROWS_AS(embedded_fixture(12), Error);
}

TEST_CASE("witness selection") {
  CHECK_THROWS_AS(witness(9), Error);
  Witness w10 = witness(10);
  CHECK(w10.achieved == 9);
  CHECK(w10.provenance.find("fixture") != std::string::npos);
  Witness w11 = witness(11);
  CHECK(w11.achieved == 10);
  CHECK(w11.provenance == "family(O2,k=-1)");
  Witness w12 = witness(12);
  CHECK(w12.achieved == 11);
  CHECK(w12.provenance == "family(E1,k=0)");
  Witness w21 = witness(21);
  CHECK(w21.achieved == 20);
  CHECK(w21.provenance.find("apex") != std::string::npos);
  Witness w24 = witness(24);
  CHECK(w24.achieved == 22);
  CHECK(w24.provenance.find("isolated") != std::string::npos);
}

TEST_CASE("catalogue csv lists verified members") {
  std::string csv = catalogue_csv(1);
  CHECK(csv.find("family,k,code,order,achieved") == 0);
  CHECK(csv.find("E1,0,S011XX,12,11") != std::string::npos);
  CHECK(csv.find("O2,-1,S0X1X^,11,10") != std::string::npos);
}
