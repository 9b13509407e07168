#include "hypower/lift_project.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypower {

namespace {

Complex pow_int(Complex z, int e) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// Local description of a support edge during the lift.
struct LiftEdge {
  int parent_index;  // edge index in the base graph
  int u, v;          // global endpoints
  int sign;
  bool live;         // both endpoint eigenvector entries nonzero
};

}  // namespace

Complex odd_root_pair(Complex a, Complex b, int k) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("odd_root_pair: k must be odd and >= 3");
  if (a == Complex{}) return {};
  // zeta = b * a^(-(k-1)/2): zeta^2 = b^2 / a^(k-1) = a, and
  // zeta^k = b^k / a^(k(k-1)/2) = b^k / b^(k-1) = b, using b^2 = a^k.
  return b / pow_int(a, (k - 1) / 2);
}

LiftResult lift(const Graph& g, int k, const SignedSubgraph& sub,
                const RealEigenpair& ep, int root_index, OddSignStyle style) {
  if (k < 3) throw std::invalid_argument("lift: k must be >= 3");
  if (ep.beta == 0.0) throw std::invalid_argument("lift: beta must be nonzero");
  if (root_index < 0 || root_index >= k)
    throw std::invalid_argument("lift: root_index out of [0, k)");
  if (k == 3 && !sub.handle.is_induced())
    throw std::invalid_argument("lift: k = 3 requires an induced subgraph");

  auto support = sub.handle.vertices();
  if (ep.y.size() != support.size())
    throw std::invalid_argument("lift: eigenvector length mismatch");
  if (sub.signs.size() != static_cast<size_t>(sub.handle.edge_count()))
    throw std::invalid_argument("lift: sign list length mismatch");

  const PowerHypergraph h = power_hypergraph(g, k);
  const Complex lambda = kth_roots(Complex{ep.beta * ep.beta, 0.0}, k)[root_index];

  // Local index and liveness per support vertex. Entries that vanish in the
  // eigenvector contribute zero coordinates and dead incident edges.
  std::vector<int> local(g.n, -1);
  for (size_t i = 0; i < support.size(); ++i) local[support[i]] = static_cast<int>(i);
  double ymax = 0.0;
  for (double yi : ep.y) ymax = std::max(ymax, std::abs(yi));
  std::vector<bool> live(support.size());
  for (size_t i = 0; i < support.size(); ++i)
    live[i] = std::abs(ep.y[i]) > 1e-12 * ymax;

  auto edge_idx = sub.handle.edge_indices();
  std::vector<LiftEdge> edges;
  for (size_t i = 0; i < edge_idx.size(); ++i) {
    const Edge& e = g.edges[edge_idx[i]];
    edges.push_back({edge_idx[i], e.u, e.v, sub.signs[i],
                     live[local[e.u]] && live[local[e.v]]});
  }

  // Core coordinates: the real positive k-th root of y_i^2.
  CVector x(h.total_vertices);
  for (size_t i = 0; i < support.size(); ++i)
    if (live[i])
      x[support[i]] = Complex{std::pow(ep.y[i] * ep.y[i], 1.0 / k), 0.0};

  // Added-vertex coordinates, one edge at a time. Every added vertex of
  // edge {i,j} is a k-th root of Z = sign * y_i y_j / beta; the eigenpair
  // equations additionally need lambda * Z = x_i x_j * x^(N_ij), which the
  // distinguished vertex absorbs as a root-of-unity twist. The twist is
  // exact: (x_i x_j / (lambda rho^2))^k = y_i^2 y_j^2 / (beta^2 Z^2) = 1.
  for (const LiftEdge& e : edges) {
    int start = h.added_block_start(e.parent_index);
    if (!e.live) continue;  // dead edges keep zero coordinates
    double z_real = e.sign * ep.y[local[e.u]] * ep.y[local[e.v]] / ep.beta;
    Complex rho;
    if (k % 2 == 1 && style == OddSignStyle::Real)
      rho = Complex{std::copysign(std::pow(std::abs(z_real), 1.0 / k), z_real),
                    0.0};
    else
      rho = kth_roots(Complex{z_real, 0.0}, k)[0];
    Complex twist_target = lambda * rho * rho / (x[e.u] * x[e.v]);
    double angle = std::arg(twist_target);
    if (angle < 0) angle += 2 * std::numbers::pi;
    int t_idx = static_cast<int>(std::llround(angle * k / (2 * std::numbers::pi))) % k;
    Complex twist = std::polar(1.0, 2 * std::numbers::pi * t_idx / k);
    if (std::abs(twist - twist_target) > 1e-8)
      throw NumericError("lift: root coordination failed (bug)");
    x[start] = rho * twist;
    for (int t = 1; t < k - 2; ++t) x[start + t] = rho;
  }

  LiftResult result;
  result.pair = TensorEigenpair{lambda, std::move(x)};
  result.source = sub;
  result.beta = ep.beta;
  result.root_index = root_index;
  result.residual = eigen_residual(h, result.pair);
  if (result.residual > 1e-9)
    throw NumericError("lift: certification failed, residual " +
                       std::to_string(result.residual));
  return result;
}

ProjectResult project(const Graph& g, int k, const TensorEigenpair& pair) {
  if (k < 3) throw std::invalid_argument("project: k must be >= 3");
  const PowerHypergraph h = power_hypergraph(g, k);
  if (std::abs(pair.lambda) < 1e-12)
    throw std::invalid_argument("project: lambda must be nonzero");
  if (eigen_residual(h, pair) > 1e-9)
    throw NumericError("project: input pair is not certified to 1e-9");

  double maxmod = 0.0;
  for (Complex v : pair.x) maxmod = std::max(maxmod, std::abs(v));
  CVector x(pair.x.size());
  for (size_t i = 0; i < pair.x.size(); ++i) x[i] = pair.x[i] / maxmod;
  const Complex lambda = pair.lambda;

  ProjectResult result;
  std::uint64_t support_mask = 0;
  std::vector<int> slot(g.n, -1);
  for (int i = 0; i < g.n; ++i)
    if (std::abs(x[i]) > 1e-7) {
      slot[i] = static_cast<int>(result.support.size());
      result.support.push_back(i);
      support_mask |= std::uint64_t{1} << i;
    }
  if (result.support.empty())
    throw NumericError("project: empty support (all core coordinates zero)");

  result.beta = std::sqrt(pow_int(lambda, k));
  result.z.resize(result.support.size());
  for (size_t i = 0; i < result.support.size(); ++i)
    result.z[i] = std::sqrt(pow_int(x[result.support[i]], k));

  // Recover sgn(i,j) per induced support edge: x^(N_ij) divided by
  // (x_i x_j / lambda)^((k-2)/2), the half powers tied to the z and beta
  // branches so that the signed adjacency relation below holds by
  // construction.
  std::uint64_t kept_mask = 0;
  std::vector<int> kept_signs;
  for (int e = 0; e < g.m(); ++e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    if (slot[u] < 0 || slot[v] < 0) continue;
    Complex prod{1.0, 0.0};
    int start = h.added_block_start(e);
    for (int t = 0; t < k - 2; ++t) prod *= x[start + t];
    Complex raw = prod * result.beta * x[u] * x[v] /
                  (lambda * result.z[slot[u]] * result.z[slot[v]]);
    double d_plus = std::abs(raw - 1.0);
    double d_minus = std::abs(raw + 1.0);
    double d_zero = std::abs(raw);
    int sgn;
    if (d_plus <= d_minus && d_plus <= d_zero)
      sgn = 1;
    else if (d_minus <= d_zero)
      sgn = -1;
    else
      sgn = 0;
    double dist = sgn == 1 ? d_plus : (sgn == -1 ? d_minus : d_zero);
    if (dist > 0.1)
      throw NumericError("project: recovered sign " + std::to_string(raw.real()) +
                         "+" + std::to_string(raw.imag()) +
                         "i is not close to {+1, -1, 0}");
    if (sgn == 0) {
      if (k == 3)
        throw NumericError("project: zero sign recovered at k = 3");
      continue;  // zero sign deletes the edge (k >= 4)
    }
    kept_mask |= std::uint64_t{1} << e;
    kept_signs.push_back(sgn);
  }

  result.subgraph.handle = SubgraphHandle{&g, support_mask, kept_mask};
  result.subgraph.signs = std::move(kept_signs);

  // beta * z_i = sum_j sgn(i,j) * z_j over the kept edges.
  auto kept = result.subgraph.handle.edge_indices();
  double res = 0.0;
  for (size_t i = 0; i < result.support.size(); ++i) {
    Complex acc{};
    for (size_t e = 0; e < kept.size(); ++e) {
      const Edge& ed = g.edges[kept[e]];
      if (ed.u == result.support[i])
        acc += static_cast<double>(result.subgraph.signs[e]) * result.z[slot[ed.v]];
      else if (ed.v == result.support[i])
        acc += static_cast<double>(result.subgraph.signs[e]) * result.z[slot[ed.u]];
    }
    res = std::max(res, std::abs(result.beta * result.z[i] - acc));
  }
  result.relation_residual = res;
  if (res > 1e-8)
    throw NumericError("project: signed adjacency relation residual " +
                       std::to_string(res) + " exceeds 1e-8");
  return result;
}

}  // namespace hypower
