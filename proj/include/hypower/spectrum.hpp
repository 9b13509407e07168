#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hypower/eigen.hpp"
#include "hypower/graph.hpp"
#include "hypower/lift_project.hpp"

namespace hypower {

// Self-contained description of the signed subgraph an eigenvalue came
// from: global vertex ids plus (u, v, sign) triples. No parent pointers, so
// reports can be copied and serialized freely.
struct Provenance {
  std::vector<int> vertices;
  std::vector<std::array<int, 3>> edges;
};

struct SpectrumEntry {
  Complex lambda;
  bool canonical = false;       // argument in [0, 2pi/k)
  double beta = 0.0;
  Provenance provenance;
  bool certified = false;
  double residual = 0.0;
  // True when the eigenvalue is NOT reachable through all-positive
  // (unsigned) subgraphs alone, i.e. it needs a genuinely signed subgraph.
  bool statement1_only = false;
};

struct SpectrumReport {
  int k = 0;
  Graph graph;
  int total_vertices = 0;
  std::vector<SpectrumEntry> entries;
};

struct EnumCaps {
  int max_vertices = 16;
  int max_edges = 16;
  int max_cycle_rank = 12;
};

// All distinct eigenvalues of the k-power hypergraph: signed induced
// subgraphs for k = 3, signed edge subgraphs for k >= 4, one representative
// signing per switching class, every nonzero beta contributing all k roots
// of beta^2, lambda = 0 injected unconditionally. Every entry is certified
// by a lifted eigenvector.
SpectrumReport distinct_eigenvalues(const Graph& g, int k, EnumCaps caps = {});

// The (incorrect as a characterization) unsigned baseline: the same
// pipeline restricted to the all-positive signing. Its values are still
// genuine eigenvalues and are certified.
SpectrumReport statement1_eigenvalues(const Graph& g, int k, EnumCaps caps = {});

// Certified eigenvalues the signed enumeration finds that the unsigned
// baseline misses.
std::vector<Complex> compare_statements(const Graph& g, int k,
                                        EnumCaps caps = {});

// (max |lambda| over the report, rho(G)^(2/k)); the two agree within 1e-9.
std::pair<double, double> spectral_radius_check(const Graph& g, int k,
                                                EnumCaps caps = {});

// Reproduces the worked counterexample: K4 with one negative edge has
// eigenvalue sqrt(5), which lifts to eigenvalue 5^(1/3) of K4^(3), while no
// unsigned induced subgraph of K4 has an eigenvalue with beta^2 = 5.
struct CounterexampleOutcome {
  bool pass = false;
  std::string transcript;
};
CounterexampleOutcome run_counterexample();

}  // namespace hypower
