#pragma once

#include <string>

#include "colref/graph.hpp"

namespace colref {

/// Isomorphism certificate: the graph6 form of a canonically relabelled
/// copy. Equal for two graphs iff they are isomorphic. Seeded by the stable
/// refinement partition, completed by individualization search; any vertex
/// colouring is ignored.
std::string canonical_code(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace colref
