#include "hypower/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hypower {

namespace {

double off_diagonal_norm(const SymMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (i != j) s += a.at(i, j) * a.at(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const SymMatrix& a) {
  double s = 0.0;
  for (double v : a.a) s += v * v;
  return std::sqrt(s);
}

}  // namespace

SymMatrix adjacency_matrix(const SignedGraph& sg) {
  SymMatrix a(sg.graph.n);
  for (int i = 0; i < sg.graph.m(); ++i) {
    const Edge& e = sg.graph.edges[i];
    a.at(e.u, e.v) = sg.signs[i];
    a.at(e.v, e.u) = sg.signs[i];
  }
  return a;
}

SubgraphMatrix adjacency_matrix(const SignedSubgraph& ss) {
  SubgraphMatrix out;
  out.vertices = ss.handle.vertices();
  std::vector<int> local(64, -1);
  for (size_t i = 0; i < out.vertices.size(); ++i)
    local[out.vertices[i]] = static_cast<int>(i);
  out.matrix = SymMatrix(static_cast<int>(out.vertices.size()));
  auto edge_idx = ss.handle.edge_indices();
  for (size_t i = 0; i < edge_idx.size(); ++i) {
    const Edge& e = ss.handle.parent->edges[edge_idx[i]];
    int u = local[e.u], v = local[e.v];
    out.matrix.at(u, v) = ss.signs[i];
    out.matrix.at(v, u) = ss.signs[i];
  }
  return out;
}

std::vector<RealEigenpair> sym_eig(const SymMatrix& input) {
  int n = input.dim;
  if (n < 1 || n > 64) throw NumericError("sym_eig: dim must be in [1, 64]");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (input.at(i, j) != input.at(j, i))
        throw NumericError("sym_eig: matrix not symmetric");
  for (double v : input.a)
    if (!std::isfinite(v)) throw NumericError("sym_eig: non-finite entry");

  SymMatrix a = input;
  // q accumulates the rotations; columns end up as eigenvectors.
  SymMatrix q(n);
  for (int i = 0; i < n; ++i) q.at(i, i) = 1.0;

  const double norm = frobenius_norm(input);
  const double target = 1e-13 * norm;
  const int max_sweeps = 100;
  bool converged = norm == 0.0;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        double apr = a.at(p, r);
        if (apr == 0.0) continue;
        double theta = (a.at(r, r) - a.at(p, p)) / (2.0 * apr);
        double t = std::copysign(1.0, theta) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a.at(i, p), air = a.at(i, r);
          a.at(i, p) = c * aip - s * air;
          a.at(i, r) = s * aip + c * air;
        }
        for (int i = 0; i < n; ++i) {
          double api = a.at(p, i), ari = a.at(r, i);
          a.at(p, i) = c * api - s * ari;
          a.at(r, i) = s * api + c * ari;
        }
        for (int i = 0; i < n; ++i) {
          double qip = q.at(i, p), qir = q.at(i, r);
          q.at(i, p) = c * qip - s * qir;
          q.at(i, r) = s * qip + c * qir;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > target)
    throw NumericError("sym_eig: Jacobi did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

  std::vector<RealEigenpair> out(n);
  for (int e = 0; e < n; ++e) {
    int col = order[e];
    out[e].beta = a.at(col, col);
    out[e].y.resize(n);
    for (int i = 0; i < n; ++i) out[e].y[i] = q.at(i, col);
    // Sign convention: first component of nontrivial magnitude positive.
    for (int i = 0; i < n; ++i) {
      if (std::abs(out[e].y[i]) > 1e-12) {
        if (out[e].y[i] < 0)
          for (double& x : out[e].y) x = -x;
        break;
      }
    }
  }
  return out;
}

std::vector<Complex> kth_roots(Complex z, int k) {
  if (k < 1) throw NumericError("kth_roots: k must be >= 1");
  std::vector<Complex> out(k);
  if (z == Complex{}) return out;
  double r = std::pow(std::abs(z), 1.0 / k);
  double theta = std::arg(z);
  if (theta < 0) theta += 2 * std::numbers::pi;
  for (int j = 0; j < k; ++j) {
    double phi = (theta + 2 * std::numbers::pi * j) / k;
    out[j] = std::polar(r, phi);
  }
  return out;
}

double spectral_radius(const Graph& g) {
  if (g.n < 1) throw NumericError("spectral_radius: empty graph");
  SignedGraph sg{g, std::vector<int>(g.edges.size(), 1)};
  double rho = 0.0;
  for (const auto& ep : sym_eig(adjacency_matrix(sg)))
    rho = std::max(rho, std::abs(ep.beta));
  return rho;
}

}  // namespace hypower
