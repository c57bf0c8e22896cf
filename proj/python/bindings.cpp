#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/constructions.hpp"
#include "cayley/containers.hpp"
#include "cayley/corpus.hpp"
#include "cayley/count.hpp"
#include "cayley/errors.hpp"
#include "cayley/io.hpp"
#include "cayley/suites.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

py::object to_int(const BigCount& c) {
  return py::module_::import("builtins").attr("int")(to_decimal(c));
}

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

CayleyGraph cayley_graph(const std::vector<int>& factors, const std::vector<py::object>& gens,
                         bool symmetrize) {
  GroupSpec group = make_group(factors);
  std::vector<Element> elems;
  for (const auto& g : gens) {
    if (py::isinstance<py::int_>(g))
      elems.push_back(Element{{g.cast<int>()}});
    else
      elems.push_back(Element{g.cast<std::vector<int>>()});
  }
  return build_cayley(group, make_generators(group, elems, symmetrize));
}

SuiteOptions options_from(const py::dict& kw) {
  SuiteOptions o;
  for (auto [key, value] : kw) {
    const std::string k = key.cast<std::string>();
    if (k == "max_order") o.max_order = value.cast<int>();
    else if (k == "max_vertices") o.max_vertices = value.cast<int>();
    else if (k == "max_side") o.max_side = value.cast<int>();
    else if (k == "max_size") o.max_size = value.cast<int>();
    else if (k == "max_m") o.max_m = value.cast<int>();
    else if (k == "max_d") o.max_d = value.cast<int>();
    else if (k == "max_k") o.max_k = value.cast<int>();
    else if (k == "j") o.j = value.cast<int>();
    else if (k == "c") o.c = value.cast<double>();
    else if (k == "samples") o.samples = value.cast<int>();
    else if (k == "seed") o.seed = value.cast<std::uint64_t>();
    else if (k == "seeds") o.seeds = value.cast<int>();
    else if (k == "retries") o.retries = value.cast<int>();
    else if (k == "alpha") o.alpha = value.cast<double>();
    else if (k == "d") o.d = value.cast<int>();
    else if (k == "ts") o.ts = value.cast<std::vector<int>>();
    else if (k == "instances") o.instances = value.cast<std::vector<std::pair<int, int>>>();
    else throw py::key_error("unknown suite option '" + k + "'");
  }
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Independent sets in Abelian Cayley graphs";

  static py::exception<Error> error(m, "CayleyError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("bipartite", &Graph::is_bipartite)
      .def_property_readonly("connected", &Graph::is_connected)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, int v) { return g.adj(v).members(); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<CayleyGraph>(m, "CayleyGraph")
      .def_property_readonly("graph", &CayleyGraph::graph)
      .def_property_readonly("degree", &CayleyGraph::degree)
      .def_property_readonly("group", [](const CayleyGraph& g) { return g.group().to_string(); })
      .def_property_readonly("generators", [](const CayleyGraph& g) { return g.generators().ids(); })
      .def("to_json", [](const CayleyGraph& g) { return graph_to_json(g).dump(); })
      .def("__repr__", [](const CayleyGraph& g) { return "<CayleyGraph " + describe(g) + ">"; });

  m.def("cayley_graph", &cayley_graph, py::arg("factors"), py::arg("generators"),
        py::arg("symmetrize") = false,
        "Generators are residues (cyclic groups) or coordinate lists.");
  m.def("cycle", &cycle_graph, py::arg("n"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("d"));
  m.def("appendix_b", [](int n, int d) { return build_appendix_b({n, d}); }, py::arg("n"),
        py::arg("d"));
  m.def(
      "appendix_a",
      [](int d, int t, std::uint64_t seed) { return build_appendix_a({d, t, seed}).graph; },
      py::arg("d") = 3, py::arg("t") = 2, py::arg("seed") = 1);
  m.def("times_k2", py::overload_cast<const CayleyGraph&>(&times_k2));
  m.def("graph_from_json", [](const std::string& text) {
    return graph_from_json(json::parse(text)).graph;
  });

  auto as_graph = [](const py::object& o) -> Graph {
    if (py::isinstance<CayleyGraph>(o)) return o.cast<const CayleyGraph&>().graph();
    return o.cast<Graph>();
  };
  m.def("count_independent_sets",
        [as_graph](const py::object& g) { return to_int(count_independent_sets(as_graph(g))); });
  m.def("count_independent_sets_bruteforce", [as_graph](const py::object& g) {
    return to_int(count_independent_sets_bruteforce(as_graph(g)));
  });
  m.def("lucas", [](int n) { return to_int(lucas(n)); });
  m.def("container_table", [as_graph](const py::object& g, bool closed_only) {
    py::dict out;
    for (const auto& [key, count] : container_table(as_graph(g), closed_only).entries)
      out[py::make_tuple(key.first, key.second)] = to_int(count);
    return out;
  }, py::arg("graph"), py::arg("closed_only") = false);
  m.def("small_closed_sets", [as_graph](const py::object& g) {
    py::list out;
    for (const auto& r : enumerate_small_2linked_closed(as_graph(g), Side::X))
      out.append(r.closure.members());
    return out;
  });
  m.def("bipartite_bound_sum",
        [as_graph](const py::object& g) { return to_int(bipartite_bound_sum(as_graph(g))); });

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, py::kwargs kw) {
    SuiteOptions o = options_from(kw);
    SuiteResult r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, o);
    }
    return to_py(r.to_json());
  }, py::arg("name"));
}
