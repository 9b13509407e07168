#include "hypower/hypergraph.hpp"

#include <cmath>
#include <stdexcept>

namespace hypower {

PowerHypergraph power_hypergraph(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("power_hypergraph: k must be >= 3");
  long long total = g.n + static_cast<long long>(g.m()) * (k - 2);
  if (total > 4096)
    throw CapError("power_hypergraph: " + std::to_string(total) +
                   " vertices exceeds cap 4096");
  PowerHypergraph h;
  h.k = k;
  h.base = g;
  h.total_vertices = static_cast<int>(total);
  for (int e = 0; e < g.m(); ++e) {
    std::vector<int> he{g.edges[e].u, g.edges[e].v};
    int start = h.added_block_start(e);
    for (int t = 0; t < k - 2; ++t) he.push_back(start + t);
    h.hyperedges.push_back(std::move(he));
  }
  return h;
}

CVector tensor_apply(const PowerHypergraph& h, const CVector& x) {
  if (static_cast<int>(x.size()) != h.total_vertices)
    throw std::invalid_argument("tensor_apply: vector length mismatch");
  CVector out(x.size());
  for (const auto& he : h.hyperedges) {
    for (size_t i = 0; i < he.size(); ++i) {
      Complex prod{1.0, 0.0};
      for (size_t j = 0; j < he.size(); ++j)
        if (j != i) prod *= x[he[j]];
      out[he[i]] += prod;
    }
  }
  return out;
}

double eigen_residual(const PowerHypergraph& h, const TensorEigenpair& pair) {
  double maxmod = 0.0;
  for (Complex v : pair.x) maxmod = std::max(maxmod, std::abs(v));
  if (maxmod == 0.0)
    throw std::invalid_argument("eigen_residual: zero eigenvector");

  CVector scaled(pair.x.size());
  for (size_t i = 0; i < pair.x.size(); ++i) scaled[i] = pair.x[i] / maxmod;
  CVector rhs = tensor_apply(h, scaled);

  double res = 0.0;
  for (size_t v = 0; v < scaled.size(); ++v) {
    Complex p{1.0, 0.0};
    for (int t = 0; t < h.k - 1; ++t) p *= scaled[v];
    res = std::max(res, std::abs(pair.lambda * p - rhs[v]));
  }
  return res;
}

bool is_eigenpair(const PowerHypergraph& h, const TensorEigenpair& pair,
                  double tol) {
  return eigen_residual(h, pair) <= tol;
}

}  // namespace hypower
