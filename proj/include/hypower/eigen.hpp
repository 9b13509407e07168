#pragma once

#include <complex>
#include <vector>

#include "hypower/graph.hpp"

namespace hypower {

using Complex = std::complex<double>;

// Dense real symmetric matrix, row-major.
struct SymMatrix {
  int dim = 0;
  std::vector<double> a;

  explicit SymMatrix(int d = 0) : dim(d), a(static_cast<size_t>(d) * d, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }
};

// Real eigenvalue with unit-norm eigenvector.
struct RealEigenpair {
  double beta = 0.0;
  std::vector<double> y;
};

// Matrix over a subgraph's vertices; vertices[i] is the global id of local
// row/column i (ascending).
struct SubgraphMatrix {
  SymMatrix matrix;
  std::vector<int> vertices;
};

SymMatrix adjacency_matrix(const SignedGraph& sg);
SubgraphMatrix adjacency_matrix(const SignedSubgraph& ss);

// Cyclic Jacobi. Eigenvalues nonincreasing, eigenvectors orthonormal with
// first nonzero component positive. dim must be in [1, 64].
std::vector<RealEigenpair> sym_eig(const SymMatrix& a);

// The k complex k-th roots of z, ordered by argument ascending in [0, 2pi).
// z = 0 yields k zeros.
std::vector<Complex> kth_roots(Complex z, int k);

// Max |eigenvalue| of the all-positive signing of g.
double spectral_radius(const Graph& g);

}  // namespace hypower
