#include "colref/stream.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "colref/errors.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"

namespace colref {

std::string FilterStats::report() const {
  std::ostringstream out;
  out << "scanned " << scanned << ", matched " << matched << ", malformed " << malformed << "\n";
  for (const auto& [degrees, count] : degree_histogram) {
    out << "  degrees " << degrees << ": " << count << "\n";
  }
  return out.str();
}

FilterStats filter_stream(std::istream& in, std::ostream& matches, std::ostream* diagnostics, bool strict) {
  FilterStats stats;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view(line);
    if (view.empty()) continue;
    ++stats.scanned;
    Graph g;
    try {
      g = graph6_decode(view);
    } catch (const Error& e) {
      if (strict) {
        fail(Errc::FormatError, "line " + std::to_string(line_number) + ": " + e.what());
      }
      ++stats.malformed;
      --stats.scanned;
      if (diagnostics) *diagnostics << "line " << line_number << ": " << e.what() << "\n";
      continue;
    }
    if (g.order() >= 1 && is_long_refinement(g)) {
      ++stats.matched;
      auto summary = degree_summary(g);
      std::ostringstream key;
      key << '{';
      for (std::size_t i = 0; i < summary.degrees.size(); ++i) {
        key << (i ? "," : "") << summary.degrees[i];
      }
      key << '}';
      stats.degree_histogram[key.str()]++;
      matches << line << "\n";
    }
  }
  return stats;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_relabelling(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabelled(g, perm);
}

} // namespace colref
