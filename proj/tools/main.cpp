#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypower/io.hpp"
#include "hypower/lift_project.hpp"
#include "hypower/spectrum.hpp"

namespace {

using namespace hypower;

// Exit codes: 0 success, 1 usage, 2 parse, 3 numeric/certification, 4 cap.
enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kNumeric = 3, kCap = 4 };

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Interprets a signed-graph file as a signed subgraph of the parent: same
// vertex count, every edge present in the parent.
SignedSubgraph signed_subgraph_of(const Graph& parent, const SignedGraph& sg) {
  if (sg.graph.n != parent.n)
    throw ParseError("signed subgraph has n = " + std::to_string(sg.graph.n) +
                     " but parent has n = " + std::to_string(parent.n));
  std::uint64_t edge_set = 0;
  std::vector<int> sign_by_parent_index(parent.edges.size(), 0);
  for (int i = 0; i < sg.graph.m(); ++i) {
    const Edge& e = sg.graph.edges[i];
    int found = -1;
    for (int j = 0; j < parent.m(); ++j)
      if (parent.edges[j] == e) found = j;
    if (found < 0)
      throw ParseError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} is not in the parent graph");
    edge_set |= std::uint64_t{1} << found;
    sign_by_parent_index[found] = sg.signs[i];
  }
  SignedSubgraph out{edge_subgraph(parent, edge_set), {}};
  for (int j = 0; j < parent.m(); ++j)
    if (edge_set >> j & 1) out.signs.push_back(sign_by_parent_index[j]);
  return out;
}

std::string fmt_complex(Complex z) {
  std::string s = format_number(z.real());
  if (z.imag() != 0.0)
    s += (z.imag() > 0 ? " + " : " - ") + format_number(std::abs(z.imag())) + "i";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues of power hypergraphs from signed subgraph spectra"};
  app.require_subcommand(1);

  std::string graph_path, signed_path, pair_path;
  int k = 3, root_index = 0, beta_index = 0;
  bool as_json = false;
  double tol = 1e-9;
  EnumCaps caps;

  auto add_common = [&](CLI::App* cmd, bool need_k) {
    cmd->add_option("--graph", graph_path, "graph file (edge-list format)")
        ->required();
    if (need_k) cmd->add_option("--k", k, "hypergraph uniformity")->required();
  };

  auto* spectrum = app.add_subcommand("spectrum",
                                      "all distinct eigenvalues of G^(k)");
  add_common(spectrum, true);
  spectrum->add_flag("--json", as_json, "JSON output");
  spectrum->add_option("--max-edges", caps.max_edges, "edge-subset cap");
  spectrum->add_option("--max-vertices", caps.max_vertices, "vertex cap");
  spectrum->add_option("--max-cycle-rank", caps.max_cycle_rank,
                       "signing enumeration cap");

  auto* lift_cmd = app.add_subcommand(
      "lift", "lift a signed-subgraph eigenpair to G^(k)");
  add_common(lift_cmd, true);
  lift_cmd->add_option("--signed", signed_path, "signed subgraph file")
      ->required();
  lift_cmd->add_option("--root-index", root_index, "which k-th root of beta^2");
  lift_cmd->add_option("--beta-index", beta_index,
                       "which eigenpair (0 = largest eigenvalue)");

  auto* verify = app.add_subcommand("verify", "check a candidate eigenpair");
  add_common(verify, true);
  verify->add_option("--pair", pair_path, "eigenpair file")->required();
  verify->add_option("--tol", tol, "acceptance tolerance");

  auto* project_cmd = app.add_subcommand(
      "project", "recover the signed subgraph behind a tensor eigenpair");
  add_common(project_cmd, true);
  project_cmd->add_option("--pair", pair_path, "eigenpair file")->required();

  app.add_subcommand("counterexample",
                     "reproduce the K4 / K4^(3) demonstration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("counterexample")) {
      auto outcome = run_counterexample();
      std::cout << outcome.transcript;
      return outcome.pass ? kOk : kNumeric;
    }

    if (k < 3) {
      std::cerr << "error: --k must be >= 3\n";
      return kUsage;
    }
    Graph g = parse_graph(slurp(graph_path));

    if (app.got_subcommand("spectrum")) {
      auto report = distinct_eigenvalues(g, k, caps);
      std::cout << (as_json ? report_to_json(report) : report_to_text(report));
      return kOk;
    }

    if (app.got_subcommand("lift")) {
      if (root_index < 0 || root_index >= k) {
        std::cerr << "error: --root-index must be in [0, k)\n";
        return kUsage;
      }
      SignedSubgraph sub =
          signed_subgraph_of(g, parse_signed_graph(slurp(signed_path)));
      auto eig = sym_eig(adjacency_matrix(sub).matrix);
      if (beta_index < 0 || beta_index >= static_cast<int>(eig.size())) {
        std::cerr << "error: --beta-index out of range\n";
        return kUsage;
      }
      if (std::abs(eig[beta_index].beta) <= 1e-8)
        throw NumericError("selected eigenvalue beta is zero; lift needs beta != 0");
      LiftResult lifted = lift(g, k, sub, eig[beta_index], root_index);
      std::cout << "# lambda = " << fmt_complex(lifted.pair.lambda)
                << ", beta = " << format_number(lifted.beta)
                << ", residual = " << format_number(lifted.residual) << "\n"
                << write_eigenpair(k, lifted.pair);
      return kOk;
    }

    if (app.got_subcommand("verify")) {
      EigenpairFile file = read_eigenpair(slurp(pair_path));
      if (file.k != k)
        throw ParseError("eigenpair file is for k = " + std::to_string(file.k));
      PowerHypergraph h = power_hypergraph(g, k);
      if (static_cast<int>(file.pair.x.size()) != h.total_vertices)
        throw ParseError("eigenpair has " + std::to_string(file.pair.x.size()) +
                         " coordinates, expected " +
                         std::to_string(h.total_vertices));
      double residual = eigen_residual(h, file.pair);
      bool ok = residual <= tol;
      std::cout << "residual = " << format_number(residual) << "\n"
                << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? kOk : kNumeric;
    }

    if (app.got_subcommand("project")) {
      EigenpairFile file = read_eigenpair(slurp(pair_path));
      if (file.k != k)
        throw ParseError("eigenpair file is for k = " + std::to_string(file.k));
      ProjectResult res = project(g, k, file.pair);
      std::cout << "support:";
      for (int v : res.support) std::cout << " " << v;
      std::cout << "\nbeta = " << fmt_complex(res.beta) << "\n";
      auto idx = res.subgraph.handle.edge_indices();
      for (size_t i = 0; i < idx.size(); ++i) {
        const Edge& e = g.edges[idx[i]];
        std::cout << "sgn{" << e.u << "," << e.v << "} = "
                  << (res.subgraph.signs[i] > 0 ? "+1" : "-1") << "\n";
      }
      std::cout << "relation residual = " << format_number(res.relation_residual)
                << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
