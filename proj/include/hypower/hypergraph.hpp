#pragma once

#include <complex>
#include <vector>

#include "hypower/eigen.hpp"
#include "hypower/graph.hpp"

namespace hypower {

using CVector = std::vector<Complex>;

// The k-uniform power hypergraph of a base graph: each base edge e = {i, j}
// becomes the hyperedge {i, j} + k-2 fresh vertices. The added block of
// edge index e occupies indices n + e*(k-2) .. n + e*(k-2) + (k-3); the
// first vertex of each block is the distinguished one used by lift.
struct PowerHypergraph {
  int k = 0;
  Graph base;
  int total_vertices = 0;
  std::vector<std::vector<int>> hyperedges;

  int added_block_start(int edge_index) const {
    return base.n + edge_index * (k - 2);
  }
};

struct TensorEigenpair {
  Complex lambda;
  CVector x;
};

PowerHypergraph power_hypergraph(const Graph& g, int k);

// Adjacency-tensor contraction: entry i is the sum over hyperedges h
// containing i of the product of x over h\{i}. The tensor itself is never
// materialized; the 1/(k-1)! normalization cancels against the (k-1)!
// orderings of each hyperedge, so one pass over unordered hyperedges is
// exact.
CVector tensor_apply(const PowerHypergraph& h, const CVector& x);

// max_v |lambda * x_v^(k-1) - (A x^(k-1))_v| after scaling x to unit
// max-modulus. Both sides are degree k-1 homogeneous, so the scaling only
// normalizes the tolerance scale.
double eigen_residual(const PowerHypergraph& h, const TensorEigenpair& pair);

bool is_eigenpair(const PowerHypergraph& h, const TensorEigenpair& pair,
                  double tol = 1e-9);

}  // namespace hypower
