#pragma once

#include <string>
#include <vector>

#include "colref/codec.hpp"
#include "colref/graph.hpp"

namespace colref {

/// The eleven catalogued families of long-refinement codes. E1..E6 produce
/// even orders, O1..O5 odd ones (their codes carry a hat). E1 and O1 are
/// singletons (k = 0 only); O2 and O3 pair a standalone member, addressed as
/// k = -1, with a parametric family.
enum class FamilyId { E1, E2, E3, E4, E5, E6, O1, O2, O3, O4, O5 };

const char* family_name(FamilyId id);
FamilyId family_from_name(const std::string& name); // throws InvalidMember

bool family_is_parametric(FamilyId id);
bool family_accepts(FamilyId id, int k);

/// The exact code of member k of a family. Throws InvalidMember for invalid
/// (family, k) combinations.
Code family_member(FamilyId id, int k);

struct CatalogueEntry {
  FamilyId family;
  int k;
  Code code;
  int order;
};

/// Every family member with parameter up to max_k (singletons included
/// once), ordered by family then k.
std::vector<CatalogueEntry> catalogue(int max_k);

/// CSV table of the catalogue: family, k, code, order, achieved iterations.
/// Verifies each member with the refinement engine while rendering.
std::string catalogue_csv(int max_k);

/// Path on n vertices (0-1-...-(n-1)).
Graph path_graph(int n);

/// Adds an apex vertex adjacent to every degree-d vertex. Requires a
/// long-refinement input with degrees {d, d+1} and a degree-d count other
/// than d+1 (which would make the result regular); the output is verified to
/// be long-refinement. Throws NotApplicable otherwise.
Graph apex_extension(const Graph& g, int d);

/// Adds one isolated vertex to a long-refinement graph of order n-1; the
/// result has order n and stabilises after n-2 rounds. Throws NotApplicable
/// when the input is not long-refinement.
Graph add_isolated(const Graph& g);

/// Turns a long-refinement graph with degrees {1,3} into one with degrees
/// {2,3}: two degree-1 vertices get joined by an edge (same order), a single
/// degree-1 vertex is deleted (order drops by one). Throws NotApplicable
/// when the preconditions fail.
Graph degree1_transform(const Graph& g);

struct Witness {
  Graph graph;
  int order = 0;
  int achieved = 0; // engine-verified iteration count, n-1 or n-2
  std::string provenance;
};

/// A graph of order n with the maximum known iteration count: n-1 whenever
/// n = 12 or n mod 18 is outside {6,12}, n-2 otherwise. Selection is
/// table-driven over generated family orders; order 10 is served by an
/// embedded fixture found by exhaustive search. Every witness is
/// engine-verified before it is returned. Throws OutOfRange for n < 10.
Witness witness(int n);

/// Long-refinement fixtures of orders 10 and 11 produced by the exhaustive
/// search; other orders throw OutOfRange.
Graph embedded_fixture(int n);

} // namespace colref
