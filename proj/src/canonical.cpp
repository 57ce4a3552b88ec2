#include "colref/canonical.hpp"

#include <algorithm>
#include <bit>

#include "canon_internal.hpp"
#include "colref/errors.hpp"
#include "colref/graph6.hpp"

namespace colref::detail {

int BitGraph::degree(int v) const {
  int d = 0;
  for (int k = 0; k < w; ++k) d += std::popcount(row(v)[k]);
  return d;
}

BitGraph BitGraph::from_graph(const Graph& g) {
  BitGraph b(g.order());
  for (const auto& [u, v] : edge_list(g)) b.add_edge(u, v);
  return b;
}

Graph BitGraph::to_graph() const {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

void OPart::init_unit(int n_) {
  lab.resize(n_);
  pos.resize(n_);
  ptn.assign(n_, 1);
  for (int i = 0; i < n_; ++i) lab[i] = pos[i] = i;
  if (n_ > 0) ptn[n_ - 1] = 0;
  cells = n_ > 0 ? 1 : 0;
}

void OPart::init_cells(int n_, const std::vector<std::vector<int>>& cells_in) {
  lab.clear();
  ptn.clear();
  pos.assign(n_, -1);
  cells = static_cast<int>(cells_in.size());
  for (const auto& cell : cells_in) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
      pos[cell[i]] = static_cast<int>(lab.size());
      lab.push_back(cell[i]);
      ptn.push_back(i + 1 < cell.size() ? 1 : 0);
    }
  }
}

int OPart::target_cell(int& size_out) const {
  int best = -1, best_size = 0;
  for (int start = 0; start < n();) {
    int end = start;
    while (ptn[end] != 0) ++end;
    int size = end - start + 1;
    if (size > 1 && (best < 0 || size < best_size)) {
      best = start;
      best_size = size;
    }
    start = end + 1;
  }
  size_out = best_size;
  return best;
}

void OPart::individualize(int start, int v) {
  int i = pos[v];
  std::swap(lab[start], lab[i]);
  pos[lab[i]] = i;
  pos[lab[start]] = start;
  ptn[start] = 0;
  ++cells;
}

namespace {

inline void mix(std::uint64_t& h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

inline int count_in(const BitGraph& g, int v, const std::uint64_t* mask) {
  const std::uint64_t* r = g.row(v);
  if (g.w == 1) return std::popcount(r[0] & mask[0]);
  int c = 0;
  for (int k = 0; k < g.w; ++k) c += std::popcount(r[k] & mask[k]);
  return c;
}

} // namespace

std::uint64_t refine(const BitGraph& g, OPart& p, std::vector<int> queue) {
  const int n = p.n();
  std::uint64_t inv = 0xcbf29ce484222325ull;
  if (n == 0) return inv;
  std::vector<char> in_queue(n, 0);
  for (int s : queue) in_queue[s] = 1;
  std::vector<std::uint64_t> mask(g.w);
  std::vector<int> cnt(n);
  std::vector<std::pair<int, int>> sorter;

  std::size_t head = 0;
  while (head < queue.size() && p.cells < n) {
    const int s = queue[head++];
    in_queue[s] = 0;
    std::fill(mask.begin(), mask.end(), 0);
    for (int i = s;; ++i) {
      mask[p.lab[i] >> 6] |= 1ull << (p.lab[i] & 63);
      if (p.ptn[i] == 0) break;
    }
    mix(inv, static_cast<std::uint64_t>(s) * 0x9e3779b97f4a7c15ull + 1);

    for (int start = 0; start < n;) {
      int end = start;
      while (p.ptn[end] != 0) ++end;
      if (end == start) {
        start = end + 1;
        continue;
      }
      int c0 = count_in(g, p.lab[start], mask.data());
      bool uniform = true;
      cnt[start] = c0;
      for (int i = start + 1; i <= end; ++i) {
        cnt[i] = count_in(g, p.lab[i], mask.data());
        if (cnt[i] != c0) uniform = false;
      }
      if (uniform) {
        mix(inv, (static_cast<std::uint64_t>(start) << 20) ^ static_cast<std::uint64_t>(c0));
        start = end + 1;
        continue;
      }

      // Split: reorder the cell by count, fragment boundaries at count
      // changes. Fragment order (ascending count) is label-invariant.
      sorter.clear();
      for (int i = start; i <= end; ++i) sorter.emplace_back(cnt[i], p.lab[i]);
      std::sort(sorter.begin(), sorter.end());
      for (int i = start; i <= end; ++i) {
        p.lab[i] = sorter[i - start].second;
        p.pos[p.lab[i]] = i;
        cnt[i] = sorter[i - start].first;
      }
      const bool was_queued = in_queue[start];
      int largest_start = -1, largest_size = 0;
      std::vector<int> fragment_starts;
      for (int i = start; i <= end;) {
        int j = i;
        while (j < end && cnt[j + 1] == cnt[i]) ++j;
        if (j < end) {
          p.ptn[j] = 0;
          ++p.cells;
        }
        fragment_starts.push_back(i);
        if (j - i + 1 > largest_size) {
          largest_size = j - i + 1;
          largest_start = i;
        }
        mix(inv, (static_cast<std::uint64_t>(start) << 40) ^ (static_cast<std::uint64_t>(cnt[i]) << 20) ^
                     static_cast<std::uint64_t>(j - i + 1));
        i = j + 1;
      }
      for (int f : fragment_starts) {
        if (!was_queued && f == largest_start) continue;
        if (!in_queue[f]) {
          in_queue[f] = 1;
          queue.push_back(f);
        }
      }
      start = end + 1;
    }
  }
  mix(inv, static_cast<std::uint64_t>(p.cells) * 0x100000001b3ull);
  return inv;
}

OPart stable_refine(const BitGraph& g, const std::vector<std::vector<int>>* initial_cells) {
  OPart p;
  if (initial_cells) {
    p.init_cells(g.n, *initial_cells);
  } else {
    p.init_unit(g.n);
  }
  std::vector<int> queue;
  for (int start = 0; start < g.n;) {
    queue.push_back(start);
    int end = start;
    while (p.ptn[end] != 0) ++end;
    start = end + 1;
  }
  refine(g, p, std::move(queue));
  return p;
}

namespace {

std::vector<std::uint64_t> leaf_code(const BitGraph& g, const std::vector<int>& lab) {
  const int n = g.n;
  std::vector<std::uint64_t> code((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (g.adjacent(lab[i], lab[j])) code[bit >> 6] |= 1ull << (63 - (bit & 63));
    }
  }
  return code;
}

class CanonSearcher {
public:
  explicit CanonSearcher(const BitGraph& g) : g_(g), n_(g.n), orbits_(g.n) {}

  enum class BestCmp { Equal, FirstOnly };

  void run(OPart root, std::uint64_t root_inv) { descend(root, 0, true, BestCmp::Equal, root_inv); }

  std::vector<int> best_lab;
  std::vector<std::uint64_t> best_code;
  UnionFind& orbits() { return orbits_; }

private:
  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = 0; i < n_; ++i) orbits_.unite(a[i], b[i]);
  }

  void descend(OPart& part, int depth, bool eq_first, BestCmp cmp, std::uint64_t inv) {
    if (!have_first_) {
      first_inv_.push_back(inv);
    } else if (eq_first) {
      eq_first = depth < static_cast<int>(first_inv_.size()) && inv == first_inv_[depth];
    }

    // In Equal mode the path invariants so far coincide with best_inv_. A
    // greater invariant rewrites the best prefix in place (the next leaf
    // reached below re-validates it), so later siblings always compare
    // against fresh values.
    if (cmp == BestCmp::Equal) {
      if (depth >= static_cast<int>(best_inv_.size())) {
        best_inv_.push_back(inv);
        best_leaf_valid_ = false;
      } else if (inv > best_inv_[depth]) {
        best_inv_.resize(depth);
        best_inv_.push_back(inv);
        best_leaf_valid_ = false;
      } else if (inv < best_inv_[depth]) {
        if (!eq_first) return;
        cmp = BestCmp::FirstOnly;
      }
    }

    if (part.discrete()) {
      leaf(part, eq_first, cmp);
      return;
    }

    int cell_size = 0;
    const int cell_start = part.target_cell(cell_size);
    std::vector<int> members(part.lab.begin() + cell_start, part.lab.begin() + cell_start + cell_size);
    std::vector<int> processed;
    for (int v : members) {
      if (depth == 0) {
        bool skip = false;
        for (int u : processed) {
          if (orbits_.same(u, v)) {
            skip = true;
            break;
          }
        }
        if (skip) continue;
        processed.push_back(v);
      }
      OPart child = part;
      child.individualize(cell_start, v);
      std::uint64_t child_inv = refine(g_, child, {cell_start});
      descend(child, depth + 1, eq_first, cmp, child_inv);
    }
  }

  void leaf(const OPart& part, bool eq_first, BestCmp cmp) {
    auto code = leaf_code(g_, part.lab);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = part.lab;
      first_code_ = code;
      best_lab = part.lab;
      best_code = std::move(code);
      best_leaf_valid_ = true;
      return;
    }
    if (eq_first && code == first_code_ && part.lab != first_lab_) {
      record_automorphism(part.lab, first_lab_);
    }
    if (cmp == BestCmp::FirstOnly) return;
    if (!best_leaf_valid_) {
      best_lab = part.lab;
      best_code = std::move(code);
      best_leaf_valid_ = true;
      return;
    }
    if (code > best_code) {
      best_lab = part.lab;
      best_code = std::move(code);
    } else if (code == best_code && part.lab != best_lab) {
      record_automorphism(part.lab, best_lab);
    }
  }

  const BitGraph& g_;
  int n_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_inv_;
  std::vector<int> first_lab_;
  std::vector<std::uint64_t> first_code_;
  std::vector<std::uint64_t> best_inv_;
  bool best_leaf_valid_ = false;
  UnionFind orbits_;
};

} // namespace

CanonOutcome canonical_search(const BitGraph& g, const std::vector<std::vector<int>>* initial_cells) {
  CanonOutcome out{{}, {}, UnionFind(g.n), std::vector<int>(g.n, 0)};
  if (g.n == 0) return out;

  OPart root;
  if (initial_cells) {
    root.init_cells(g.n, *initial_cells);
  } else {
    root.init_unit(g.n);
  }
  std::vector<int> queue;
  for (int start = 0; start < g.n;) {
    queue.push_back(start);
    int end = start;
    while (root.ptn[end] != 0) ++end;
    start = end + 1;
  }
  std::uint64_t root_inv = refine(g, root, std::move(queue));
  for (int start = 0; start < g.n;) {
    int end = start;
    while (root.ptn[end] != 0) ++end;
    for (int i = start; i <= end; ++i) out.root_cell[root.lab[i]] = start;
    start = end + 1;
  }

  if (root.discrete()) {
    out.lab = root.lab;
    out.code = leaf_code(g, root.lab);
    return out;
  }
  CanonSearcher searcher(g);
  searcher.run(std::move(root), root_inv);
  out.lab = searcher.best_lab;
  out.code = std::move(searcher.best_code);
  out.orbits = searcher.orbits();
  return out;
}

namespace {

class AutSearcher {
public:
  explicit AutSearcher(const BitGraph& g) : g_(g), n_(g.n), uf_(g.n) {}

  void run(OPart root) { rec(root); }

  std::vector<std::vector<int>> gens;
  UnionFind& orbits() { return uf_; }

private:
  struct LeftWalk {
    std::vector<std::uint64_t> inv; // node invariants below the walk's root
    std::vector<int> lab;
    std::vector<std::uint64_t> code;
  };

  LeftWalk leftmost(OPart part) {
    LeftWalk walk;
    while (!part.discrete()) {
      int size = 0;
      int start = part.target_cell(size);
      part.individualize(start, part.lab[start]);
      walk.inv.push_back(refine(g_, part, {start}));
    }
    walk.lab = part.lab;
    walk.code = leaf_code(g_, part.lab);
    return walk;
  }

  void record(const std::vector<int>& to, const std::vector<int>& from) {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from[i]] = to[i];
    for (int v = 0; v < n_; ++v) uf_.unite(v, perm[v]);
    gens.push_back(std::move(perm));
  }

  bool match(const OPart& part, const LeftWalk& left, std::size_t level) {
    if (part.discrete()) {
      if (leaf_code(g_, part.lab) == left.code) {
        record(part.lab, left.lab);
        return true;
      }
      return false;
    }
    if (level >= left.inv.size()) return false;
    int size = 0;
    const int start = part.target_cell(size);
    std::vector<int> members(part.lab.begin() + start, part.lab.begin() + start + size);
    for (int v : members) {
      OPart child = part;
      child.individualize(start, v);
      std::uint64_t inv = refine(g_, child, {start});
      if (inv != left.inv[level]) continue;
      if (match(child, left, level + 1)) return true;
    }
    return false;
  }

  // Stabilizer chain along the leftmost path: recurse into the first
  // target-cell vertex, then search one linking automorphism per remaining
  // vertex not yet known equivalent.
  void rec(const OPart& part) {
    if (part.discrete()) return;
    int size = 0;
    const int start = part.target_cell(size);
    std::vector<int> members(part.lab.begin() + start, part.lab.begin() + start + size);
    const int c1 = members[0];

    OPart child1 = part;
    child1.individualize(start, c1);
    const std::uint64_t inv1 = refine(g_, child1, {start});
    rec(child1);
    LeftWalk left = leftmost(child1);

    for (std::size_t i = 1; i < members.size(); ++i) {
      const int c = members[i];
      if (uf_.same(c, c1)) continue;
      OPart childc = part;
      childc.individualize(start, c);
      if (refine(g_, childc, {start}) != inv1) continue;
      match(childc, left, 0);
    }
  }

  const BitGraph& g_;
  int n_;
  UnionFind uf_;
};

} // namespace

AutOutcome automorphism_search(const BitGraph& g) {
  AutOutcome out{{}, UnionFind(g.n)};
  if (g.n == 0) return out;
  OPart root = stable_refine(g, nullptr);
  if (root.discrete()) return out; // a discrete equitable partition pins every vertex
  AutSearcher searcher(g);
  searcher.run(std::move(root));
  out.generators = std::move(searcher.gens);
  out.orbits = searcher.orbits();
  return out;
}

bool vertex_equivalent(const BitGraph& g, int a, int b) {
  if (a == b) return true;
  auto marked = [&](int x) {
    std::vector<std::vector<int>> cells(2);
    cells[0].push_back(x);
    for (int v = 0; v < g.n; ++v) {
      if (v != x) cells[1].push_back(v);
    }
    return canonical_search(g, &cells).code;
  };
  return marked(a) == marked(b);
}

std::vector<char> cut_vertices(const BitGraph& g) {
  const int n = g.n;
  std::vector<char> cut(n, 0);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0), children(n, 0);
  int timer = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.assign(1, root);
    while (!stack.empty()) {
      int v = stack.back();
      if (next[v] < n) {
        int u = next[v]++;
        if (u == v || !g.adjacent(v, u)) continue;
        if (disc[u] == -1) {
          parent[u] = v;
          ++children[v];
          disc[u] = low[u] = timer++;
          stack.push_back(u);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (parent[p] != -1 && low[v] >= disc[p]) cut[p] = 1;
        }
      }
    }
    if (children[root] > 1) cut[root] = 1;
  }
  return cut;
}

bool bit_is_long_refinement(const BitGraph& g) {
  const int n = g.n;
  if (n == 1) return true;
  if (n > 64) return false; // generator never goes there
  std::vector<std::uint64_t> cls(n, 0);
  const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
  cls[0] = full;
  int k = 1;

  std::uint64_t buckets[3];
  int bucket_count[3];
  while (k < n) {
    int split_at = -1;
    std::uint64_t frag0 = 0, frag1 = 0;
    for (int c = 0; c < k; ++c) {
      std::uint64_t m = cls[c];
      if (std::popcount(m) == 1) continue;
      // Refine this class by counts against every class; more than two
      // fragments (or a second splitting class) kills the property.
      std::uint64_t groups[2] = {m, 0};
      int group_count = 1;
      for (int d = 0; d < k && group_count <= 2; ++d) {
        int next_count = 0;
        std::uint64_t next[2] = {0, 0};
        for (int gi = 0; gi < group_count; ++gi) {
          std::uint64_t grp = groups[gi];
          int nb = 0;
          for (std::uint64_t rest = grp; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int cval = std::popcount(g.row(v)[0] & cls[d]);
            int b = 0;
            while (b < nb && bucket_count[b] != cval) ++b;
            if (b == nb) {
              if (nb == 3) return false;
              bucket_count[nb] = cval;
              buckets[nb] = 0;
              ++nb;
              if (nb == 3) return false;
            }
            buckets[b] |= 1ull << v;
          }
          for (int b = 0; b < nb; ++b) {
            if (next_count == 2) return false;
            next[next_count++] = buckets[b];
          }
          nb = 0;
        }
        groups[0] = next[0];
        groups[1] = next[1];
        group_count = next_count;
      }
      if (group_count == 1) continue;
      if (split_at != -1) return false;
      split_at = c;
      frag0 = groups[0];
      frag1 = groups[1];
    }
    if (split_at == -1) return false; // stabilised before discrete
    cls[split_at] = frag0;
    cls[k++] = frag1;
  }
  return true;
}

} // namespace colref::detail

namespace colref {

std::string canonical_code(const Graph& g) {
  if (g.order() == 0) return graph6_encode(g);
  detail::BitGraph b = detail::BitGraph::from_graph(g);
  auto outcome = detail::canonical_search(b);
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[outcome.lab[i]] = i;
  Graph plain = Graph::from_edges(g.order(), edge_list(g));
  return graph6_encode(relabelled(plain, perm));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

} // namespace colref
