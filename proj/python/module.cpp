#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypower/io.hpp"
#include "hypower/lift_project.hpp"
#include "hypower/spectrum.hpp"

namespace py = pybind11;
using namespace hypower;

namespace {

// Builds a signed subgraph of g from (u, v, sign) triples.
SignedSubgraph subgraph_from_triples(
    const Graph& g, const std::vector<std::tuple<int, int, int>>& edges) {
  std::uint64_t edge_set = 0;
  std::vector<int> sign_by_index(g.edges.size(), 0);
  for (auto [u, v, s] : edges) {
    Edge e{std::min(u, v), std::max(u, v)};
    int found = -1;
    for (int j = 0; j < g.m(); ++j)
      if (g.edges[j] == e) found = j;
    if (found < 0)
      throw py::value_error("edge not present in the parent graph");
    if (s != 1 && s != -1) throw py::value_error("sign must be +1 or -1");
    edge_set |= std::uint64_t{1} << found;
    sign_by_index[found] = s;
  }
  SignedSubgraph out{edge_subgraph(g, edge_set), {}};
  for (int j = 0; j < g.m(); ++j)
    if (edge_set >> j & 1) out.signs.push_back(sign_by_index[j]);
  return out;
}

py::dict entry_to_dict(const SpectrumEntry& e) {
  py::dict d;
  d["lambda"] = e.lambda;
  d["canonical"] = e.canonical;
  d["beta"] = e.beta;
  d["residual"] = e.residual;
  d["certified"] = e.certified;
  d["statement1_only"] = e.statement1_only;
  py::list edges;
  for (const auto& ed : e.provenance.edges)
    edges.append(py::make_tuple(ed[0], ed[1], ed[2]));
  py::dict prov;
  prov["vertices"] = e.provenance.vertices;
  prov["edges"] = edges;
  d["provenance"] = prov;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypower, m) {
  m.doc() = "Eigenvalues of power hypergraphs from signed subgraph spectra";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<CapError>(m, "CapError");
  py::register_exception<NumericError>(m, "NumericError");

  py::class_<Graph>(m, "Graph")
      .def_readonly("n", &Graph::n)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               py::list out;
                               for (const Edge& e : g.edges)
                                 out.append(py::make_tuple(e.u, e.v));
                               return out;
                             })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n) +
               ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"),
        "Parse edge-list text ('n m' header, then 'u v' lines).");

  m.def(
      "spectrum",
      [](const Graph& g, int k, bool signed_subgraphs) {
        auto report = signed_subgraphs ? distinct_eigenvalues(g, k)
                                       : statement1_eigenvalues(g, k);
        py::list out;
        for (const auto& e : report.entries) out.append(entry_to_dict(e));
        return out;
      },
      py::arg("graph"), py::arg("k"), py::arg("signed_subgraphs") = true,
      "All distinct eigenvalues of G^(k) as a list of dicts.");

  m.def(
      "spectrum_json",
      [](const Graph& g, int k) {
        return report_to_json(distinct_eigenvalues(g, k));
      },
      py::arg("graph"), py::arg("k"));

  m.def(
      "compare_statements",
      [](const Graph& g, int k) { return compare_statements(g, k); },
      py::arg("graph"), py::arg("k"),
      "Eigenvalues only reachable through genuinely signed subgraphs.");

  m.def(
      "spectral_radius_check",
      [](const Graph& g, int k) { return spectral_radius_check(g, k); },
      py::arg("graph"), py::arg("k"));

  m.def(
      "lift",
      [](const Graph& g, int k,
         const std::vector<std::tuple<int, int, int>>& signed_edges,
         int root_index, int beta_index) {
        SignedSubgraph sub = subgraph_from_triples(g, signed_edges);
        auto eig = sym_eig(adjacency_matrix(sub).matrix);
        if (beta_index < 0 || beta_index >= static_cast<int>(eig.size()))
          throw py::value_error("beta_index out of range");
        LiftResult res = lift(g, k, sub, eig[beta_index], root_index);
        py::dict d;
        d["lambda"] = res.pair.lambda;
        d["x"] = res.pair.x;
        d["beta"] = res.beta;
        d["residual"] = res.residual;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("signed_edges"),
      py::arg("root_index") = 0, py::arg("beta_index") = 0,
      "Lift a signed-subgraph eigenpair to a certified tensor eigenpair.");

  m.def(
      "residual",
      [](const Graph& g, int k, Complex lam, const CVector& x) {
        return eigen_residual(power_hypergraph(g, k), TensorEigenpair{lam, x});
      },
      py::arg("graph"), py::arg("k"), py::arg("lam"), py::arg("x"),
      "Tensor eigenpair residual (0 for an exact eigenpair).");

  m.def(
      "project",
      [](const Graph& g, int k, Complex lam, const CVector& x) {
        ProjectResult res = project(g, k, TensorEigenpair{lam, x});
        py::dict d;
        d["support"] = res.support;
        py::list edges;
        auto idx = res.subgraph.handle.edge_indices();
        for (size_t i = 0; i < idx.size(); ++i)
          edges.append(py::make_tuple(g.edges[idx[i]].u, g.edges[idx[i]].v,
                                      res.subgraph.signs[i]));
        d["signed_edges"] = edges;
        d["beta"] = res.beta;
        d["z"] = res.z;
        d["relation_residual"] = res.relation_residual;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("lam"), py::arg("x"),
      "Recover the signed subgraph behind a certified tensor eigenpair.");

  m.def("counterexample", [] {
    auto outcome = run_counterexample();
    return py::make_tuple(outcome.pass, outcome.transcript);
  });
}
