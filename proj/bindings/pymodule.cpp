#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "folmod/formula.hpp"
#include "folmod/graph.hpp"
#include "folmod/library.hpp"
#include "folmod/modelcheck.hpp"
#include "folmod/reductions.hpp"
#include "folmod/solvers.hpp"

namespace py = pybind11;
using namespace folmod;

namespace {

py::object solution_to_py(const std::optional<Solution>& sol) {
  if (!sol) return py::none();
  py::dict out;
  out["variant"] = to_string(sol->variant);
  out["vertices"] = sol->vertices;
  out["pairs"] = sol->pairs;
  out["nodes"] = sol->stats.nodes;
  out["depth"] = sol->stats.depth_reached;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph modification solvers for first-order definable target properties";

  py::enum_<Quantifier>(m, "Quantifier")
      .value("FORALL", Quantifier::ForAll)
      .value("EXISTS", Quantifier::Exists);

  py::enum_<Side>(m, "Side").value("SIGMA", Side::Sigma).value("PI", Side::Pi);

  py::enum_<Variant>(m, "Variant")
      .value("VERTEX_REMOVAL", Variant::VertexRemoval)
      .value("EDGE_REMOVAL", Variant::EdgeRemoval)
      .value("EDGE_COMPLETION", Variant::EdgeCompletion)
      .value("EDGE_EDITING", Variant::EdgeEditing);

  py::enum_<EdgeMode>(m, "EdgeMode")
      .value("REMOVAL", EdgeMode::Removal)
      .value("EDITING", EdgeMode::Editing);

  py::class_<PrefixClass>(m, "PrefixClass")
      .def_readonly("level", &PrefixClass::level)
      .def_readonly("side", &PrefixClass::side)
      .def("__str__", [](const PrefixClass& c) { return to_string(c); })
      .def("__repr__", [](const PrefixClass& c) { return "<PrefixClass " + to_string(c) + ">"; });

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return pretty_print(f); })
      .def("__repr__", [](const Formula& f) { return "<Formula " + pretty_print(f) + ">"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a.equals(b); })
      .def_property_readonly("is_sentence", &Formula::is_sentence)
      .def_property_readonly("variable_count", &Formula::variable_count)
      .def_property_readonly("free_names", [](const Formula& f) {
        std::vector<std::string> out;
        for (int v : f.free_vars()) out.push_back(f.name_of(v));
        return out;
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("vertices", &Graph::vertices)
      .def_property_readonly("edge_list", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("parse", &parse, py::arg("text"), py::arg("free_names") = std::vector<std::string>{});
  m.def("pretty_print", py::overload_cast<const Formula&>(&pretty_print));
  m.def("classify", &classify);
  m.def("open_formula", &open_formula);
  m.def("complement_formula", &complement_formula);
  m.def("build_vertex_formula", [](const Formula& f) {
    VertexFormula vf = build_vertex_formula(f);
    return py::make_tuple(vf.result, vf.degree_guarded, vf.incidence_encoded);
  });

  m.def("parse_graph", &parse_graph);
  m.def("format_graph", &format_graph);
  m.def("read_graph", &read_graph);
  m.def("write_graph", &write_graph);
  m.def("delete_vertices", &delete_vertices);
  m.def("edit_edges",
        [](const Graph& g, const std::vector<std::pair<int, int>>& pairs, const std::string& mode) {
          EditMode m = mode == "remove" ? EditMode::Remove
                       : mode == "add" ? EditMode::Add
                                       : EditMode::Toggle;
          return edit_edges(g, pairs, m);
        },
        py::arg("graph"), py::arg("pairs"), py::arg("mode") = "toggle");
  m.def("complement", &complement);
  m.def("complete_graph", &graphs::complete);
  m.def("path_graph", &graphs::path);
  m.def("cycle_graph", &graphs::cycle);
  m.def("petersen_graph", &graphs::petersen);
  m.def("vertex_cover_formula", &formulas::vertex_cover);
  m.def("diameter_at_most_two_formula", &formulas::diameter_at_most_two);
  m.def("clique_neighborhood_formula", &formulas::clique_neighborhood);
  m.def("no_isolated_vertex_formula", &formulas::no_isolated_vertex);
  m.def("witness_rooted_everywhere_formula", &formulas::witness_rooted_everywhere);
  m.def("witness_graph", &graphs::witness_graph);

  m.def(
      "models",
      [](const Graph& g, const Formula& f, const std::vector<int>& assignment) {
        return models(g, f, assignment);
      },
      py::arg("graph"), py::arg("formula"), py::arg("assignment") = std::vector<int>{});
  m.def(
      "find_violating_tuple",
      [](const Graph& g, const Formula& f, const std::vector<int>& opened) -> py::object {
        auto v = find_violating_tuple(g, f, opened);
        if (!v) return py::none();
        return py::cast(*v);
      },
      py::arg("graph"), py::arg("formula"), py::arg("opened") = std::vector<int>{});

  m.def("solve_vertex_sigma3", [](const Graph& g, const Formula& f, int k) {
    return solution_to_py(solve_vertex_sigma3(g, f, k));
  });
  m.def("solve_edge_sigma2", [](const Graph& g, const Formula& f, int k, EdgeMode mode) {
    return solution_to_py(solve_edge_sigma2(g, f, k, mode));
  });
  m.def("solve_sigma1", [](const Graph& g, const Formula& f, int k, Variant variant) {
    return solution_to_py(solve_sigma1(g, f, k, variant));
  });
  m.def("brute_force", [](Variant variant, const Graph& g, const Formula& f, int k) {
    return solution_to_py(brute_force({variant, g, f, k}));
  });
  m.def(
      "dispatch",
      [](Variant variant, const Graph& g, const Formula& f, int k, bool allow_brute_force) {
        DispatchResult res = dispatch({variant, g, f, k}, DispatchOptions{allow_brute_force});
        py::dict out;
        out["outcome"] = res.outcome == Outcome::Yes ? "YES"
                         : res.outcome == Outcome::No ? "NO"
                                                      : "UNSUPPORTED";
        out["method"] = res.method;
        out["reason"] = res.reason;
        out["solution"] = solution_to_py(res.solution);
        return out;
      },
      py::arg("variant"), py::arg("graph"), py::arg("formula"), py::arg("k"),
      py::arg("allow_brute_force") = false);

  m.def("extract_hitting_family", [](const Graph& g, const Formula& f) {
    HittingFamily fam = extract_hitting_family(g, f);
    return py::make_tuple(fam.universe, fam.sets);
  });
  m.def("kernelize_hitting_family",
        [](const std::vector<int>& universe, const std::vector<std::vector<int>>& sets, int k) {
          HittingFamily fam{universe, sets};
          KernelizeResult res = kernelize_hitting_family(fam, k);
          py::dict out;
          out["infeasible"] = res.infeasible;
          out["universe"] = res.family.universe;
          out["sets"] = res.family.sets;
          return out;
        });

  m.def("edge_to_vertex", [](const Graph& g, const Formula& f, int k) {
    EdgeToVertexReduction red = edge_to_vertex(g, f, k);
    py::dict out;
    out["graph"] = red.instance.graph;
    out["formula"] = red.instance.formula;
    out["k"] = red.instance.k;
    out["degree_guarded"] = red.degree_guarded;
    out["incidence_encoded"] = red.incidence_encoded;
    return out;
  });
  m.def("removal_to_completion", [](const Graph& g, const Formula& f, int k) {
    ModificationInstance out = removal_to_completion({Variant::EdgeRemoval, g, f, k});
    return py::make_tuple(out.graph, out.formula, out.k);
  });
  m.def("completion_to_removal", [](const Graph& g, const Formula& f, int k) {
    ModificationInstance out = completion_to_removal({Variant::EdgeCompletion, g, f, k});
    return py::make_tuple(out.graph, out.formula, out.k);
  });
  m.def("cross_compose_clique", [](const std::vector<Graph>& inputs, int k) {
    std::vector<std::pair<Graph, int>> pairs;
    for (const auto& g : inputs) pairs.emplace_back(g, k);
    CrossComposition comp = cross_compose_clique(pairs);
    py::dict out;
    out["graph"] = comp.instance.graph;
    out["formula"] = comp.instance.formula;
    out["k"] = comp.instance.k;
    out["copies"] = comp.copies;
    return out;
  });
}
