#include "colref/families.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "colref/errors.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"

namespace colref {

namespace {

// Fixtures produced by the exhaustive search (colref search --long-refinement
// --list): the lexicographically first of the 16 order-10 graphs, and the
// unique order-11 graph with degrees {2,3}, which cross-checks the O2
// singleton. No catalogued family covers order 10.
constexpr const char* kFixtureOrder10 = "I?OipqUdO";
constexpr const char* kFixtureOrder11 = "J?D@AgkccS?";

struct FamilyInfo {
  FamilyId id;
  const char* name;
  bool parametric;
  bool has_singleton; // k = -1 member
};

constexpr FamilyInfo kFamilies[] = {
    {FamilyId::E1, "E1", false, false}, {FamilyId::E2, "E2", true, false},
    {FamilyId::E3, "E3", true, false},  {FamilyId::E4, "E4", true, false},
    {FamilyId::E5, "E5", true, false},  {FamilyId::E6, "E6", true, false},
    {FamilyId::O1, "O1", false, false}, {FamilyId::O2, "O2", true, true},
    {FamilyId::O3, "O3", true, true},   {FamilyId::O4, "O4", true, false},
    {FamilyId::O5, "O5", true, false},
};

const FamilyInfo& info(FamilyId id) { return kFamilies[static_cast<int>(id)]; }

std::string repeat(const std::string& w, int k) {
  std::string out;
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

std::string member_text(FamilyId id, int k) {
  const std::string ones = repeat("1", k);
  const std::string blk011 = repeat("011", k);
  const std::string blk110 = repeat("110", k);
  switch (id) {
    case FamilyId::E1: return "S011XX";
    case FamilyId::E2: return "S" + ones + "00" + ones + "X1X" + ones + "0";
    case FamilyId::E3: return "S" + ones + "1100" + ones + "XX" + ones + "0";
    case FamilyId::E4: return "S" + ones + "001" + ones + "XX" + ones + "10";
    case FamilyId::E5: return "S011" + blk011 + "00" + blk110 + "XX" + blk011 + "0";
    case FamilyId::E6: return "S" + blk011 + "00" + blk110 + "1X0X1" + blk011 + "0";
    case FamilyId::O1: return "S1^11XX";
    case FamilyId::O2:
      if (k == -1) return "S0X1X^";
      return "S" + ones + "101" + ones + "X1X" + ones + "1^";
    case FamilyId::O3:
      if (k == -1) return "S110XX^";
      return "S11" + ones + "101" + ones + "XX" + ones + "1^";
    case FamilyId::O4: return "S" + ones + "0" + ones + "1XX" + ones + "1^";
    case FamilyId::O5: return "S" + blk011 + "00" + blk110 + "X1^X" + blk011 + "0";
  }
  fail(Errc::Internal, "unknown family");
}

} // namespace

const char* family_name(FamilyId id) { return info(id).name; }

FamilyId family_from_name(const std::string& name) {
  for (const auto& f : kFamilies) {
    if (name == f.name) return f.id;
  }
  fail(Errc::InvalidMember, "unknown family '" + name + "'");
}

bool family_is_parametric(FamilyId id) { return info(id).parametric; }

bool family_accepts(FamilyId id, int k) {
  if (k == -1) return info(id).has_singleton;
  if (k == 0) return true;
  return k > 0 && info(id).parametric;
}

Code family_member(FamilyId id, int k) {
  if (!family_accepts(id, k)) {
    fail(Errc::InvalidMember,
         std::string(family_name(id)) + " has no member k=" + std::to_string(k));
  }
  return parse_code(member_text(id, k));
}

std::vector<CatalogueEntry> catalogue(int max_k) {
  std::vector<CatalogueEntry> entries;
  for (const auto& f : kFamilies) {
    int from = f.has_singleton ? -1 : 0;
    int to = f.parametric ? max_k : 0;
    for (int k = from; k <= to; ++k) {
      Code code = family_member(f.id, k);
      entries.push_back({f.id, k, code, code_order(code)});
    }
  }
  return entries;
}

std::string catalogue_csv(int max_k) {
  std::ostringstream out;
  out << "family,k,code,order,achieved\n";
  for (const auto& e : catalogue(max_k)) {
    Graph g = build_graph(e.code);
    out << family_name(e.family) << ',' << e.k << ',' << render_code(e.code) << ',' << e.order << ','
        << wl1_iterations(g) << '\n';
  }
  return out.str();
}

Graph path_graph(int n) {
  if (n < 1) fail(Errc::OutOfRange, "path needs at least one vertex");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph apex_extension(const Graph& g, int d) {
  auto summary = degree_summary(g);
  if (summary.degrees != std::vector<int>{d, d + 1}) {
    fail(Errc::NotApplicable, "degrees are not {d, d+1} for d=" + std::to_string(d));
  }
  if (summary.counts.at(d) == d + 1) {
    fail(Errc::NotApplicable, "exactly d+1 vertices of degree d would make the result regular");
  }
  if (!is_long_refinement(g)) fail(Errc::NotApplicable, "input is not a long-refinement graph");

  const int n = g.order();
  Graph out(n + 1);
  for (const auto& [u, v] : edge_list(g)) out.add_edge(u, v);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == d) out.add_edge(v, n);
  }
  if (!is_long_refinement(out)) fail(Errc::Internal, "apex extension failed engine verification");
  return out;
}

Graph add_isolated(const Graph& g) {
  if (g.order() == 0 || !is_long_refinement(g)) {
    fail(Errc::NotApplicable, "input is not a long-refinement graph");
  }
  Graph out(g.order() + 1);
  for (const auto& [u, v] : edge_list(g)) out.add_edge(u, v);
  if (wl1_iterations(out) != out.order() - 2) {
    fail(Errc::Internal, "isolated-vertex extension failed engine verification");
  }
  return out;
}

Graph degree1_transform(const Graph& g) {
  auto summary = degree_summary(g);
  if (summary.degrees != std::vector<int>{1, 3}) fail(Errc::NotApplicable, "degrees are not {1,3}");
  if (!is_long_refinement(g)) fail(Errc::NotApplicable, "input is not a long-refinement graph");

  std::vector<int> ones;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) ones.push_back(v);
  }
  Graph out;
  if (ones.size() == 2) {
    out = g;
    out.add_edge(ones[0], ones[1]);
  } else if (ones.size() == 1) {
    // Delete the degree-1 vertex; its neighbour drops to degree 2.
    const int drop = ones[0];
    out = Graph(g.order() - 1);
    for (const auto& [u, v] : edge_list(g)) {
      if (u == drop || v == drop) continue;
      out.add_edge(u - (u > drop ? 1 : 0), v - (v > drop ? 1 : 0));
    }
  } else {
    // A long-refinement graph has at most two degree-1 vertices.
    fail(Errc::Internal, "long-refinement graph with more than two degree-1 vertices");
  }
  auto out_summary = degree_summary(out);
  if (out_summary.degrees != std::vector<int>{2, 3} || !is_long_refinement(out)) {
    fail(Errc::Internal, "degree-1 transform failed engine verification");
  }
  return out;
}

Graph embedded_fixture(int n) {
  if (n == 10) return graph6_decode(kFixtureOrder10);
  if (n == 11) return graph6_decode(kFixtureOrder11);
  fail(Errc::OutOfRange, "no embedded fixture of order " + std::to_string(n));
}

namespace {

Witness make_witness(Graph g, int order, int expected, std::string provenance) {
  int achieved = wl1_iterations(g);
  if (g.order() != order || achieved != expected) {
    fail(Errc::Internal, "witness verification failed for order " + std::to_string(order));
  }
  return Witness{std::move(g), order, achieved, std::move(provenance)};
}

} // namespace

Witness witness(int n) {
  if (n < 10) fail(Errc::OutOfRange, "witnesses start at order 10");
  if (n == 10) return make_witness(embedded_fixture(10), 10, 9, "fixture(order-10 exhaustive search)");

  // Orders are indexed from generated members rather than congruence
  // arithmetic; E2 grows slowest (6k+14), so this k bound covers [10, n].
  const int max_k = std::max(0, (n - 13) / 6 + 1);
  std::map<int, CatalogueEntry> by_order;
  for (auto& e : catalogue(max_k)) {
    by_order.emplace(e.order, std::move(e)); // first family listed wins
  }

  if (auto it = by_order.find(n); it != by_order.end()) {
    const auto& e = it->second;
    std::string provenance = "family(" + std::string(family_name(e.family)) + ",k=" + std::to_string(e.k) + ")";
    return make_witness(build_graph(e.code), n, n - 1, std::move(provenance));
  }

  if (n % 2 == 1) {
    // Odd gaps: extend the even member one below by an apex on the degree-2
    // vertices (their count is even there, never 3).
    auto it = by_order.find(n - 1);
    if (it == by_order.end() || it->second.family == FamilyId::E1) {
      fail(Errc::Internal, "no base member of order " + std::to_string(n - 1) + " for apex extension");
    }
    const auto& e = it->second;
    std::string provenance =
        "apex(family(" + std::string(family_name(e.family)) + ",k=" + std::to_string(e.k) + "))";
    return make_witness(apex_extension(build_graph(e.code), 2), n, n - 1, std::move(provenance));
  }

  // Even gaps (n mod 18 in {6,12}, n >= 24): isolated vertex on top of the
  // odd witness one below; n-2 rounds is the best known there.
  Witness base = witness(n - 1);
  std::string provenance = "isolated(" + base.provenance + ")";
  return make_witness(add_isolated(base.graph), n, n - 2, std::move(provenance));
}

} // namespace colref
