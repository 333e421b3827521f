#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quditcolor/cost.hpp"
#include "quditcolor/decompose.hpp"
#include "quditcolor/grover.hpp"

namespace py = pybind11;
using namespace qcolor;

namespace {

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges_1based) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_1based.size());
    for (auto [u, v] : edges_1based) edges.emplace_back(u - 1, v - 1);
    return Graph(n, std::move(edges));
}

py::dict run_to_dict(const GroverRun& run) {
    py::dict out;
    out["iterations"] = run.iterations;
    out["kickback"] = kickback_mode_name(run.mode);
    out["histogram"] = run.histogram;
    out["marked"] = run.marked;
    out["success_probability"] = run.success_probability;
    return out;
}

py::dict layout_to_dict(const RegisterLayout& layout) {
    py::dict out;
    out["n"] = layout.n;
    out["k"] = layout.k;
    out["d"] = layout.d;
    out["digits_per_vertex"] = layout.c;
    out["data_qudits"] = layout.m;
    out["comparator_ancillas"] = layout.r;
    out["has_invalid_flag"] = layout.has_invalid_flag;
    out["output_wire"] = layout.output_wire();
    out["total_wires"] = layout.total_wires();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Grover k-coloring oracle synthesis and mixed-radix simulation";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"),
             "Build a graph from 1-indexed edge pairs")
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (auto [u, v] : g.edges()) out.emplace_back(u + 1, v + 1);
                                   return out;
                               },
                               "Edges as 1-indexed pairs")
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static("path", &Graph::path, py::arg("n"))
        .def_static("cycle", &Graph::cycle, py::arg("n"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.num_vertices() << ", edges=" << g.num_edges() << ")";
            return os.str();
        });

    m.def("parse_graph",
          [](const std::string& text, const std::string& format) {
              return parse_graph(text, graph_format_from_name(format));
          },
          py::arg("text"), py::arg("format") = "edge-list");

    m.def("plan_layout",
          [](const Graph& g, int k, int d) { return layout_to_dict(plan_layout(g, k, d)); },
          py::arg("graph"), py::arg("k"), py::arg("d"));

    m.def("synth_oracle_netlist",
          [](const Graph& g, int k, int d, const std::string& kickback) {
              return serialize_netlist(
                  synth_oracle(g, k, d, kickback_mode_from_name(kickback)).circuit());
          },
          py::arg("graph"), py::arg("k"), py::arg("d"), py::arg("kickback") = "paper-exact");

    m.def("marked_states",
          [](const Graph& g, int k, int d) { return synth_oracle(g, k, d).marked_states(); },
          py::arg("graph"), py::arg("k"), py::arg("d"));

    m.def("count_solutions", &count_solutions, py::arg("graph"), py::arg("k"), py::arg("d"));

    m.def("optimal_iterations",
          [](std::size_t space, std::size_t solutions) {
              return optimal_iterations(space, solutions);
          },
          py::arg("search_space"), py::arg("solutions"));

    m.def("run_grover",
          [](const Graph& g, int k, int d, std::optional<int> iterations,
             const std::string& kickback) {
              return run_to_dict(
                  run_grover(g, k, d, iterations, kickback_mode_from_name(kickback)));
          },
          py::arg("graph"), py::arg("k"), py::arg("d"), py::arg("iterations") = py::none(),
          py::arg("kickback") = "paper-exact");

    m.def("decompose_mct_binary_netlist",
          [](int controls) { return serialize_netlist(decompose_mct_binary(controls)); },
          py::arg("n_controls"));

    m.def("decompose_mct_qudit_netlist",
          [](int controls, int d) { return serialize_netlist(decompose_mct_qudit(controls, d)); },
          py::arg("n_controls"), py::arg("d"));

    m.def("decompose_netlist",
          [](const std::string& netlist, const std::string& level) {
              return serialize_netlist(
                  decompose_circuit(parse_netlist(netlist), decompose_level_from_name(level)));
          },
          py::arg("netlist"), py::arg("level") = "two-wire");

    m.def("normalize_netlist",
          [](const std::string& netlist) { return serialize_netlist(parse_netlist(netlist)); },
          py::arg("netlist"), "Parse and re-serialize a netlist (canonical bytes)");

    m.def("verify_netlists",
          [](const std::string& a, const std::string& b,
             std::optional<std::vector<int>> subspace_dims) {
              const auto report =
                  verify_equivalence(parse_netlist(a), parse_netlist(b), subspace_dims);
              return py::make_tuple(report.equal, report.max_deviation, report.max_leakage);
          },
          py::arg("netlist"), py::arg("reference"), py::arg("subspace_dims") = py::none(),
          "Returns (equal_up_to_global_phase, max_deviation, max_leakage)");

    m.def("cost_report_json",
          [](const Graph& g, int k, int d, bool compare_baselines) {
              CostReport report = analyze(synth_oracle(g, k, d));
              if (compare_baselines) {
                  if (d == 3)
                      compare_ternary_baselines(report);
                  else
                      compare_binary_baselines(report);
              }
              return cost_report_json(report);
          },
          py::arg("graph"), py::arg("k"), py::arg("d"), py::arg("compare_baselines") = false);
}
