// Python bindings for the main operations: graph plumbing, refinement runs,
// string codes, family generators, witnesses, and the exhaustive search.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "colref/canonical.hpp"
#include "colref/codec.hpp"
#include "colref/enumerate.hpp"
#include "colref/errors.hpp"
#include "colref/families.hpp"
#include "colref/graph6.hpp"
#include "colref/refine.hpp"
#include "colref/stream.hpp"

namespace py = pybind11;
using namespace colref;

namespace {

Partition partition_from_classes(const std::vector<std::vector<int>>& classes) {
  Partition p;
  p.classes = classes;
  p.normalise();
  return p;
}

} // namespace

PYBIND11_MODULE(_colref, m) {
  m.doc() = "colour refinement iteration toolkit";

  py::register_exception<Error>(m, "ColrefError");

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph::from_edges(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::order)
      .def("edges", [](const Graph& g) { return edge_list(g); })
      .def("neighbours", [](const Graph& g, int v) { return g.neighbours(v); })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def_property("colouring",
                    [](const Graph& g) { return g.colouring(); },
                    [](Graph& g, std::optional<std::vector<int>> c) { g.set_colouring(std::move(c)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<ColouringTrace>(m, "Trace")
      .def_readonly("n", &ColouringTrace::n)
      .def_readonly("wl1", &ColouringTrace::wl1)
      .def_property_readonly("rounds",
                             [](const ColouringTrace& t) {
                               std::vector<std::vector<std::vector<int>>> rounds;
                               for (const auto& r : t.rounds) rounds.push_back(r.classes);
                               return rounds;
                             })
      .def("to_json", [](const ColouringTrace& t, bool pretty) { return trace_to_json(t, pretty); },
           py::arg("pretty") = false);

  py::class_<Witness>(m, "Witness")
      .def_readonly("graph", &Witness::graph)
      .def_readonly("order", &Witness::order)
      .def_readonly("achieved", &Witness::achieved)
      .def_readonly("provenance", &Witness::provenance);

  m.def("graph6_encode", &graph6_encode);
  m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); });
  m.def("complement", &complement);
  m.def("is_connected", &is_connected);
  m.def("degree_summary", [](const Graph& g) { return degree_summary(g).counts; });
  m.def("dot_export", [](const Graph& g) { return dot_export(g); });
  m.def("random_gnp", &random_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def(
      "run",
      [](const Graph& g, std::optional<std::vector<std::vector<int>>> initial, const std::string& engine) {
        std::optional<Partition> p;
        if (initial) p = partition_from_classes(*initial);
        return run(g, std::move(p), engine == "reference" ? Engine::Reference : Engine::Optimized);
      },
      py::arg("graph"), py::arg("initial") = std::nullopt, py::arg("engine") = "optimized");
  m.def("refine_round", [](const Graph& g, const std::vector<std::vector<int>>& classes) {
    return refine_round(g, partition_from_classes(classes)).classes;
  });
  m.def("wl1_iterations", &wl1_iterations);
  m.def("is_long_refinement", &is_long_refinement);
  m.def("verify_equitable", [](const Graph& g, const std::vector<std::vector<int>>& classes) {
    return verify_equitable(g, partition_from_classes(classes));
  });

  m.def("build_graph", [](const std::string& code) { return build_graph(parse_code(code)); });
  m.def("decode_graph", [](const Graph& g) { return render_code(decode_graph(g)); });
  m.def("code_order", [](const std::string& code) { return code_order(parse_code(code)); });
  m.def("parse_code", [](const std::string& code) { return render_code(parse_code(code)); });

  m.def("family_member",
        [](const std::string& family, int k) { return render_code(family_member(family_from_name(family), k)); },
        py::arg("family"), py::arg("k") = 0);
  m.def("catalogue", [](int max_k) {
    std::vector<std::tuple<std::string, int, std::string, int>> rows;
    for (const auto& e : catalogue(max_k)) {
      rows.emplace_back(family_name(e.family), e.k, render_code(e.code), e.order);
    }
    return rows;
  });
  m.def("catalogue_csv", &catalogue_csv);
  m.def("path_graph", &path_graph);
  m.def("apex_extension", &apex_extension);
  m.def("add_isolated", &add_isolated);
  m.def("degree1_transform", &degree1_transform);
  m.def("witness", &witness);

  m.def("canonical_code", &canonical_code);
  m.def("are_isomorphic", &are_isomorphic);
  m.def(
      "count_long_refinement",
      [](int n, bool connected_only, std::optional<std::vector<int>> degree_set,
         std::optional<int> max_degree, bool prune, int jobs) {
        SearchConstraints c;
        c.connected_only = connected_only;
        c.degree_set = std::move(degree_set);
        c.max_degree = max_degree;
        c.prune_by_degree = prune;
        auto r = count_long_refinement(n, c, jobs);
        return py::make_tuple(r.scanned_classes, r.graph6);
      },
      py::arg("n"), py::arg("connected_only") = false, py::arg("degree_set") = std::nullopt,
      py::arg("max_degree") = std::nullopt, py::arg("prune") = false, py::arg("jobs") = 1);
  m.def(
      "enumerate_count",
      [](int n, bool connected_only, std::optional<std::vector<int>> degree_set,
         std::optional<int> max_degree, bool prune, bool long_refinement, int jobs) {
        SearchConstraints c;
        c.order = n;
        c.connected_only = connected_only;
        c.degree_set = std::move(degree_set);
        c.max_degree = max_degree;
        c.prune_by_degree = prune;
        c.long_refinement_only = long_refinement;
        std::uint64_t count = 0;
        enumerate_graphs(c, [&](const Graph&) { ++count; }, jobs);
        return count;
      },
      py::arg("n"), py::arg("connected_only") = false, py::arg("degree_set") = std::nullopt,
      py::arg("max_degree") = std::nullopt, py::arg("prune") = false,
      py::arg("long_refinement") = false, py::arg("jobs") = 1);
}
