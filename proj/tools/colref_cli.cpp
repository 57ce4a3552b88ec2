// Command-line surface for the colour refinement toolkit: refinement runs
// and traces, string-code handling, family generation, witnesses, the
// exhaustive search, and stream filtering.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "colref/canonical.hpp"
#include "colref/codec.hpp"
#include "colref/enumerate.hpp"
#include "colref/errors.hpp"
#include "colref/families.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"
#include "colref/stream.hpp"

namespace {

using namespace colref;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotApplicable:
    case Errc::NotEncodable:
    case Errc::NotRealizable:
      return 2;
    case Errc::StructureError:
    case Errc::Internal:
      return 3;
    default:
      return 1;
  }
}

std::string read_input(const std::string& source) {
  if (source == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) fail(Errc::FormatError, "cannot open '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RefineOptions {
  std::string input = "-";
  bool trace = false;
  bool dot = false;
  bool naive = false;
};

int cmd_refine(const RefineOptions& opt) {
  auto graphs = graph6_decode_lines(read_input(opt.input));
  if (graphs.empty()) fail(Errc::FormatError, "no graphs in input");
  for (const auto& g : graphs) {
    ColouringTrace t = run(g, std::nullopt, opt.naive ? Engine::Reference : Engine::Optimized);
    if (opt.trace) {
      std::cout << trace_to_json(t, true) << "\n";
    } else if (opt.dot) {
      std::cout << dot_export(g, &t.stable());
    } else {
      std::cout << "wl1=" << t.wl1 << " classes=";
      for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        std::cout << (i ? "," : "") << t.rounds[i].class_count();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_code_build(const std::string& text, bool dot) {
  Graph g = build_graph(parse_code(text));
  if (dot) {
    std::cout << dot_export(g);
  } else {
    std::cout << graph6_encode(g) << "\n";
  }
  return 0;
}

int cmd_code_decode(const std::string& input) {
  auto graphs = graph6_decode_lines(read_input(input));
  if (graphs.empty()) fail(Errc::FormatError, "no graphs in input");
  for (const auto& g : graphs) std::cout << render_code(decode_graph(g)) << "\n";
  return 0;
}

int cmd_family_gen(const std::string& family, int k, bool order_only, bool g6) {
  Code code = family_member(family_from_name(family), k);
  if (order_only) {
    std::cout << code_order(code) << "\n";
  } else if (g6) {
    std::cout << graph6_encode(build_graph(code)) << "\n";
  } else {
    std::cout << render_code(code) << "\n";
  }
  return 0;
}

int cmd_witness(int n, bool g6) {
  Witness w = witness(n);
  std::cout << "order=" << w.order << " achieved=" << w.achieved << " provenance=" << w.provenance << "\n";
  if (g6) std::cout << graph6_encode(w.graph) << "\n";
  return 0;
}

struct SearchOptions {
  int order = 0;
  bool connected = false;
  std::vector<int> degrees;
  int max_degree = -1;
  bool prune = false;
  bool long_refinement = false;
  bool list = false;
  bool stats = false;
  int jobs = 1;
};

int cmd_search(const SearchOptions& opt) {
  SearchConstraints c;
  c.order = opt.order;
  c.connected_only = opt.connected;
  if (!opt.degrees.empty()) c.degree_set = opt.degrees;
  if (opt.max_degree >= 0) c.max_degree = opt.max_degree;
  c.prune_by_degree = opt.prune;
  c.long_refinement_only = opt.long_refinement;

  std::vector<std::string> codes;
  std::uint64_t count = 0;
  auto stats = enumerate_graphs(
      c,
      [&](const Graph& g) {
        ++count;
        if (opt.list) codes.push_back(canonical_code(g));
      },
      opt.jobs);
  std::sort(codes.begin(), codes.end());
  for (const auto& s : codes) std::cout << s << "\n";
  std::cout << "count=" << count << "\n";
  if (opt.stats) {
    std::cerr << "classes=" << stats.generated << " candidates=" << stats.candidates << " seconds="
              << stats.seconds << "\n";
  }
  if (opt.long_refinement && count == 0) return 2;
  return 0;
}

int cmd_filter(const std::string& input, bool strict, bool print_stats) {
  FilterStats stats;
  if (input == "-") {
    stats = filter_stream(std::cin, std::cout, &std::cerr, strict);
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) fail(Errc::FormatError, "cannot open '" + input + "'");
    stats = filter_stream(in, std::cout, &std::cerr, strict);
  }
  if (print_stats) std::cerr << stats.report();
  return stats.matched > 0 ? 0 : 2;
}

int cmd_bench(int order, int samples, std::uint64_t seed) {
  for (double p : {0.05, 0.5, 0.95}) {
    double naive_s = 0, opt_s = 0;
    for (int i = 0; i < samples; ++i) {
      Graph g = random_gnp(order, p, seed + i);
      auto t0 = std::chrono::steady_clock::now();
      auto a = run(g, std::nullopt, Engine::Reference);
      auto t1 = std::chrono::steady_clock::now();
      auto b = run(g, std::nullopt, Engine::Optimized);
      auto t2 = std::chrono::steady_clock::now();
      if (a.rounds != b.rounds) fail(Errc::Internal, "engine disagreement in bench");
      naive_s += std::chrono::duration<double>(t1 - t0).count();
      opt_s += std::chrono::duration<double>(t2 - t1).count();
    }
    std::cout << "n=" << order << " p=" << p << " samples=" << samples << " naive=" << naive_s
              << "s optimized=" << opt_s << "s\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"colref: colour refinement iteration toolkit"};
  app.require_subcommand(1);

  RefineOptions refine_opt;
  auto* refine_cmd = app.add_subcommand("refine", "run colour refinement on graph6 input");
  refine_cmd->add_option("input", refine_opt.input, "graph6 file or - for stdin");
  refine_cmd->add_flag("--trace", refine_opt.trace, "print the full trace as JSON");
  refine_cmd->add_flag("--dot", refine_opt.dot, "print DOT with the stable partition");
  refine_cmd->add_flag("--naive", refine_opt.naive, "use the reference engine");

  auto* code_cmd = app.add_subcommand("code", "string codes of long-refinement graphs");
  code_cmd->require_subcommand(1);
  std::string code_text;
  bool code_dot = false;
  auto* build_cmd = code_cmd->add_subcommand("build", "build the graph of a code");
  build_cmd->add_option("code", code_text)->required();
  build_cmd->add_flag("--dot", code_dot, "emit DOT instead of graph6");
  std::string decode_input = "-";
  auto* decode_cmd = code_cmd->add_subcommand("decode", "recover the code of a graph");
  decode_cmd->add_option("input", decode_input, "graph6 file or - for stdin");
  std::string order_text;
  auto* order_cmd = code_cmd->add_subcommand("order", "order of the encoded graph");
  order_cmd->add_option("code", order_text)->required();

  auto* family_cmd = app.add_subcommand("family", "catalogued long-refinement families");
  family_cmd->require_subcommand(1);
  int list_max_k = 8;
  auto* list_cmd = family_cmd->add_subcommand("list", "CSV catalogue of members");
  list_cmd->add_option("--max-k", list_max_k, "largest family parameter");
  std::string gen_family;
  int gen_k = 0;
  bool gen_order = false, gen_g6 = false;
  auto* gen_cmd = family_cmd->add_subcommand("gen", "one family member");
  gen_cmd->add_option("family", gen_family, "family id (E1..E6, O1..O5)")->required();
  gen_cmd->add_option("--k", gen_k, "parameter (-1 for the singleton member)");
  gen_cmd->add_flag("--order", gen_order, "print the order only");
  gen_cmd->add_flag("--g6", gen_g6, "print graph6 of the built graph");

  int witness_n = 0;
  bool witness_g6 = false;
  auto* witness_cmd = app.add_subcommand("witness", "max-iteration witness of a given order");
  witness_cmd->add_option("n", witness_n, "order (>= 10)")->required();
  witness_cmd->add_flag("--g6", witness_g6, "also print graph6");

  SearchOptions search_opt;
  auto* search_cmd = app.add_subcommand("search", "isomorph-free exhaustive generation");
  search_cmd->add_option("--order", search_opt.order, "graph order")->required();
  search_cmd->add_flag("--connected", search_opt.connected, "connected graphs only");
  search_cmd->add_option("--degrees", search_opt.degrees, "exact distinct degree set")->delimiter(',');
  search_cmd->add_option("--max-degree", search_opt.max_degree, "degree bound");
  search_cmd->add_flag("--prune", search_opt.prune, "prune augmentation by the degree bound");
  search_cmd->add_flag("--long-refinement", search_opt.long_refinement, "keep long-refinement graphs only");
  search_cmd->add_flag("--list", search_opt.list, "print sorted canonical graph6 forms");
  search_cmd->add_flag("--stats", search_opt.stats, "print statistics to stderr");
  search_cmd->add_option("--jobs", search_opt.jobs, "worker threads");

  std::string filter_input = "-";
  bool filter_strict = false, filter_stats = false;
  auto* filter_cmd = app.add_subcommand("filter", "keep long-refinement graphs from a graph6 stream");
  filter_cmd->add_option("input", filter_input, "graph6 file or - for stdin");
  filter_cmd->add_flag("--strict", filter_strict, "abort on malformed lines");
  filter_cmd->add_flag("--stats", filter_stats, "print statistics to stderr");

  int bench_order = 200, bench_samples = 20;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "compare engines on random graphs");
  bench_cmd->add_option("--order", bench_order, "graph order");
  bench_cmd->add_option("--samples", bench_samples, "samples per density");
  bench_cmd->add_option("--seed", bench_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*refine_cmd) return cmd_refine(refine_opt);
    if (*build_cmd) return cmd_code_build(code_text, code_dot);
    if (*decode_cmd) return cmd_code_decode(decode_input);
    if (*order_cmd) {
      std::cout << code_order(parse_code(order_text)) << "\n";
      return 0;
    }
    if (*list_cmd) {
      std::cout << catalogue_csv(list_max_k);
      return 0;
    }
    if (*gen_cmd) return cmd_family_gen(gen_family, gen_k, gen_order, gen_g6);
    if (*witness_cmd) return cmd_witness(witness_n, witness_g6);
    if (*search_cmd) return cmd_search(search_opt);
    if (*filter_cmd) return cmd_filter(filter_input, filter_strict, filter_stats);
    if (*bench_cmd) return cmd_bench(bench_order, bench_samples, bench_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
