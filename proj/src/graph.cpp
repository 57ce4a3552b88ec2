#include "colref/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "colref/errors.hpp"

namespace colref {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) fail(Errc::OutOfRange, "negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    fail(Errc::OutOfRange, "vertex " + std::to_string(v) + " not in [0," + std::to_string(n_) + ")");
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::InvalidEdge, "self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  return true;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return total / 2;
}

const std::vector<int>& Graph::neighbours(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

void Graph::set_colouring(std::optional<std::vector<int>> colouring) {
  if (colouring && static_cast<int>(colouring->size()) != n_) {
    fail(Errc::InvalidPartition, "colouring size does not match vertex count");
  }
  colouring_ = std::move(colouring);
}

std::string DegreeSummary::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [d, c] : counts) {
    if (!first) out << ", ";
    out << d << ':' << c;
    first = false;
  }
  out << '}';
  return out.str();
}

DegreeSummary degree_summary(const Graph& g) {
  DegreeSummary s;
  for (int v = 0; v < g.order(); ++v) s.counts[g.degree(v)]++;
  for (const auto& [d, c] : s.counts) s.degrees.push_back(d);
  return s;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.neighbours(u);
    auto it = nb.begin();
    for (int v = u + 1; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) c.add_edge(u, v);
    }
  }
  return c;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbours(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph relabelled(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) fail(Errc::OutOfRange, "permutation size mismatch");
  Graph h(n);
  for (const auto& [u, v] : edge_list(g)) h.add_edge(perm[u], perm[v]);
  if (g.colouring()) {
    std::vector<int> col(n);
    for (int v = 0; v < n; ++v) col[perm[v]] = (*g.colouring())[v];
    h.set_colouring(std::move(col));
  }
  return h;
}

} // namespace colref
