#pragma once

#include "hypower/eigen.hpp"
#include "hypower/graph.hpp"
#include "hypower/hypergraph.hpp"

namespace hypower {

// For odd k the per-edge sign factor admits a real k-th root; the default
// uses it. PrincipalRoot takes the principal complex root instead. Both
// certify; they exist side by side as a cross-check.
enum class OddSignStyle { Real, PrincipalRoot };

struct LiftResult {
  TensorEigenpair pair;
  SignedSubgraph source;
  double beta = 0.0;
  int root_index = 0;
  double residual = 0.0;
};

// Turns an eigenpair (beta, y) of a signed subgraph into a certified tensor
// eigenpair of the power hypergraph, with lambda the root_index-th k-th root
// of beta^2. Requires beta != 0, and an induced subgraph when k = 3.
// Throws NumericError if the certified residual exceeds 1e-9.
LiftResult lift(const Graph& g, int k, const SignedSubgraph& sub,
                const RealEigenpair& ep, int root_index,
                OddSignStyle style = OddSignStyle::Real);

struct ProjectResult {
  SignedSubgraph subgraph;      // support subgraph with recovered signs
  Complex beta;                 // square root of lambda^k
  std::vector<int> support;     // global vertex ids, ascending
  CVector z;                    // coordinated branch of x_i^(k/2), per support vertex
  double relation_residual = 0.0;
};

// Inverse direction: recovers from a certified tensor eigenpair with
// lambda != 0 a signed subgraph together with (beta, z) satisfying the
// signed adjacency relation beta*z_i = sum_j sgn(i,j)*z_j. Zero signs drop
// the edge (k >= 4 only; a zero sign at k = 3 is a consistency error).
ProjectResult project(const Graph& g, int k, const TensorEigenpair& pair);

// Closed form for odd k: the unique zeta with zeta^2 = a and zeta^k = b,
// assuming b^2 = a^k.
Complex odd_root_pair(Complex a, Complex b, int k);

}  // namespace hypower
