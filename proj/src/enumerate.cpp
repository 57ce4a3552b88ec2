#include "colref/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "canon_internal.hpp"
#include "colref/canonical.hpp"
#include "colref/errors.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"

namespace colref {

namespace detail {
namespace {

constexpr int kMaxOrder = 20; // subset orbits use dense 2^q tables

struct GenSettings {
  int target = 1;
  bool connected = false;
  int max_degree = -1; // augmentation pruning bound, -1 = none
};

// One extension step: parent rows plus a new last vertex adjacent to `mask`.
BitGraph extend(const BitGraph& g, std::uint32_t mask) {
  BitGraph child(g.n + 1);
  for (int v = 0; v < g.n; ++v) child.row(v)[0] = g.row(v)[0];
  std::uint64_t m = mask;
  child.row(g.n)[0] = m;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    child.row(v)[0] |= 1ull << g.n;
  }
  return child;
}

// Canonical-augmentation acceptance: the new vertex (id m-1) must be
// equivalent to the canonically chosen deletion vertex. In connected mode
// that vertex is the last canonical position holding a non-cut vertex, so
// parents stay connected.
bool accept_child(const BitGraph& child, bool connected) {
  const int m = child.n;
  const int fresh = m - 1;
  OPart stable = stable_refine(child, nullptr);

  if (stable.discrete()) {
    // A discrete equitable partition admits no nontrivial automorphism, so
    // the canonical labelling is the refinement order itself.
    if (!connected) return stable.lab[m - 1] == fresh;
    auto cut = cut_vertices(child);
    for (int i = m - 1; i >= 0; --i) {
      if (!cut[stable.lab[i]]) return stable.lab[i] == fresh;
    }
    return false;
  }

  auto outcome = canonical_search(child);
  int w = -1;
  if (!connected) {
    w = outcome.lab[m - 1];
  } else {
    auto cut = cut_vertices(child);
    for (int i = m - 1; i >= 0; --i) {
      if (!cut[outcome.lab[i]]) {
        w = outcome.lab[i];
        break;
      }
    }
    if (w == -1) return false;
    if (cut[fresh]) return w == fresh; // cut status is preserved by automorphisms
  }
  if (w == fresh) return true;
  if (outcome.root_cell[w] != outcome.root_cell[fresh]) return false;
  if (outcome.orbits.same(w, fresh)) return true;
  return vertex_equivalent(child, w, fresh);
}

std::uint32_t apply_perm_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    out |= 1u << perm[v];
  }
  return out;
}

struct Generator {
  GenSettings settings;
  std::function<void(const BitGraph&)> sink; // graphs of the target order
  std::uint64_t candidates = 0;
  std::uint64_t generated = 0;

  // Collect mode: stop at `collect_order` and hand the graphs out instead
  // (used to split work across threads).
  int collect_order = -1;
  std::vector<BitGraph>* collected = nullptr;

  void run_from(const BitGraph& seed) { recurse(seed); }

  void recurse(const BitGraph& g) {
    if (g.n == settings.target) {
      ++generated;
      sink(g);
      return;
    }
    if (g.n == collect_order) {
      collected->push_back(g);
      return;
    }
    const int q = g.n;
    const std::uint32_t universe = q >= 31 ? 0 : (1u << q) - 1;

    // Degree pruning: the fresh vertex obeys the bound, and so must every
    // endpoint it attaches to.
    std::uint32_t allowed = universe;
    if (settings.max_degree >= 0) {
      for (int v = 0; v < q; ++v) {
        if (g.degree(v) >= settings.max_degree) allowed &= ~(1u << v);
      }
    }

    // Subset orbits under Aut(parent): only orbit representatives extend.
    std::vector<std::uint32_t> mask_root;
    auto aut = automorphism_search(g);
    if (!aut.generators.empty()) {
      UnionFind uf(1u << q);
      for (std::uint32_t mask = 0; mask <= universe; ++mask) {
        for (const auto& perm : aut.generators) uf.unite(mask, apply_perm_mask(mask, perm));
      }
      mask_root.resize(universe + 1u);
      for (std::uint32_t mask = 0; mask <= universe; ++mask) mask_root[mask] = uf.find(mask);
    }

    for (std::uint32_t mask = settings.connected ? 1 : 0; mask <= universe; ++mask) {
      if ((mask & ~allowed) != 0) continue;
      if (settings.max_degree >= 0 && std::popcount(mask) > settings.max_degree) continue;
      if (!mask_root.empty() && mask_root[mask] != mask) continue;
      ++candidates;
      BitGraph child = extend(g, mask);
      if (accept_child(child, settings.connected)) recurse(child);
    }
  }
};

} // namespace
} // namespace detail

namespace {

bool passes_filters(const Graph& g, const SearchConstraints& c) {
  if (c.connected_only && !is_connected(g)) return false;
  if (c.max_degree) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) > *c.max_degree) return false;
    }
  }
  if (c.degree_set) {
    auto summary = degree_summary(g);
    std::vector<int> want = *c.degree_set;
    std::sort(want.begin(), want.end());
    if (summary.degrees != want) return false;
  }
  return true;
}

detail::GenSettings settings_for(const SearchConstraints& c) {
  detail::GenSettings s;
  s.target = c.order;
  s.connected = c.connected_only;
  if (c.prune_by_degree) {
    if (c.max_degree) {
      s.max_degree = *c.max_degree;
    } else if (c.degree_set && !c.degree_set->empty()) {
      s.max_degree = *std::max_element(c.degree_set->begin(), c.degree_set->end());
    }
  }
  return s;
}

} // namespace

SearchStats enumerate_graphs(const SearchConstraints& constraints,
                             const std::function<void(const Graph&)>& visitor, int jobs) {
  if (constraints.order < 1 || constraints.order > detail::kMaxOrder) {
    fail(Errc::OutOfRange, "search order must be in [1," + std::to_string(detail::kMaxOrder) + "]");
  }
  if (constraints.degree_set) {
    for (int d : *constraints.degree_set) {
      if (d < 0 || d >= constraints.order) fail(Errc::OutOfRange, "degree bound outside [0, order)");
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  SearchStats stats;

  detail::BitGraph seed(1);
  auto filter_and_visit = [&](const detail::BitGraph& b, auto&& emit) {
    Graph g = b.to_graph();
    if (!passes_filters(g, constraints)) return;
    if (constraints.long_refinement_only) {
      if (!detail::bit_is_long_refinement(b)) return;
      // Survivors get the independent reference engine as confirmation.
      if (run(g, Partition::unit(g.order()), Engine::Reference).wl1 != g.order() - 1) {
        fail(Errc::Internal, "early-abort filter and reference engine disagree");
      }
    }
    emit(g);
  };

  if (jobs <= 1 || constraints.order <= 3) {
    detail::Generator gen;
    gen.settings = settings_for(constraints);
    gen.sink = [&](const detail::BitGraph& b) {
      filter_and_visit(b, [&](const Graph& g) {
        ++stats.emitted;
        visitor(g);
      });
    };
    gen.run_from(seed);
    stats.candidates = gen.candidates;
    stats.generated = gen.generated;
  } else {
    // Split at two levels below the target and farm the subtrees out.
    const int split_order = std::max(1, constraints.order - 2);
    std::vector<detail::BitGraph> roots;
    detail::Generator top;
    top.settings = settings_for(constraints);
    top.collect_order = split_order;
    top.collected = &roots;
    top.run_from(seed);

    std::atomic<std::size_t> next_root{0};
    std::atomic<std::uint64_t> candidates{top.candidates}, generated{top.generated};
    std::mutex sink_mutex;
    std::vector<std::pair<std::string, Graph>> emitted; // canonical code + graph
    auto worker = [&]() {
      detail::Generator gen;
      gen.settings = settings_for(constraints);
      gen.sink = [&](const detail::BitGraph& b) {
        filter_and_visit(b, [&](const Graph& g) {
          std::lock_guard<std::mutex> lock(sink_mutex);
          emitted.emplace_back(canonical_code(g), g);
        });
      };
      while (true) {
        std::size_t i = next_root.fetch_add(1);
        if (i >= roots.size()) break;
        gen.recurse(roots[i]);
      }
      candidates += gen.candidates;
      generated += gen.generated;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::sort(emitted.begin(), emitted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [code, g] : emitted) {
      ++stats.emitted;
      visitor(g);
    }
    stats.candidates = candidates.load();
    stats.generated = generated.load();
  }

  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats;
}

LongRefinementCount count_long_refinement(int n, SearchConstraints base, int jobs) {
  base.order = n;
  base.long_refinement_only = true;
  LongRefinementCount result;
  result.stats = enumerate_graphs(
      base, [&](const Graph& g) { result.graph6.push_back(canonical_code(g)); }, jobs);
  result.scanned_classes = result.stats.generated;
  std::sort(result.graph6.begin(), result.graph6.end());
  return result;
}

} // namespace colref
