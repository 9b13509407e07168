#include "hypower/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "hypower/hypergraph.hpp"

namespace hypower {

namespace {

constexpr double kDedupTol = 1e-8;
constexpr double kBetaSkip = 1e-8;

struct Candidate {
  Complex lambda;
  double beta = 0.0;
  SignedSubgraph signing;
  RealEigenpair ep;
  int root_index = 0;
};

Provenance make_provenance(const SignedSubgraph& ss) {
  Provenance p;
  p.vertices = ss.handle.vertices();
  auto idx = ss.handle.edge_indices();
  for (size_t i = 0; i < idx.size(); ++i) {
    const Edge& e = ss.handle.parent->edges[idx[i]];
    p.edges.push_back({e.u, e.v, ss.signs[i]});
  }
  return p;
}

// Enumerates signed subgraphs (induced for k = 3, edge subsets otherwise)
// and collects the deduplicated eigenvalue candidates in enumeration order,
// so the first (lexicographically smallest) provenance wins.
std::vector<Candidate> collect(const Graph& g, int k, bool signed_enum,
                               const EnumCaps& caps) {
  std::vector<Candidate> kept;
  auto handles = (k == 3) ? enumerate_induced_subgraphs(g, caps.max_vertices)
                          : enumerate_edge_subsets(g, caps.max_edges);
  for (const auto& h : handles) {
    if (h.vertex_count() == 0) continue;
    auto signings = enumerate_signings_mod_switching(h, caps.max_cycle_rank);
    size_t limit = signed_enum ? signings.size() : 1;  // pattern 0 = all +1
    for (size_t si = 0; si < limit; ++si) {
      auto sm = adjacency_matrix(signings[si]);
      for (const auto& ep : sym_eig(sm.matrix)) {
        if (std::abs(ep.beta) <= kBetaSkip) continue;
        auto roots = kth_roots(Complex{ep.beta * ep.beta, 0.0}, k);
        for (int ri = 0; ri < k; ++ri) {
          bool dup = false;
          for (const auto& c : kept)
            if (std::abs(c.lambda - roots[ri]) <= kDedupTol) {
              dup = true;
              break;
            }
          if (!dup) kept.push_back({roots[ri], ep.beta, signings[si], ep, ri});
        }
      }
    }
  }
  return kept;
}

bool is_canonical(Complex lambda, int k) {
  if (lambda == Complex{}) return true;
  double a = std::arg(lambda);
  if (a < 0) a += 2 * std::numbers::pi;
  // Values a hair below 2pi are wrapped zeros of the argument.
  if (a > 2 * std::numbers::pi - 1e-12) a = 0.0;
  return a < 2 * std::numbers::pi / k - 1e-12;
}

SpectrumReport build_report(const Graph& g, int k, bool signed_enum,
                            const EnumCaps& caps) {
  if (g.n < 1) throw std::invalid_argument("spectrum: empty graph");
  if (k < 3) throw std::invalid_argument("spectrum: k must be >= 3");

  const PowerHypergraph h = power_hypergraph(g, k);
  SpectrumReport report;
  report.k = k;
  report.graph = g;
  report.total_vertices = h.total_vertices;

  // lambda = 0 is always present: any single nonzero coordinate is an
  // eigenvector. Certify with the basis vector at vertex 0.
  {
    SpectrumEntry zero;
    zero.lambda = Complex{};
    zero.canonical = true;
    zero.beta = 0.0;
    zero.provenance.vertices = {0};
    CVector e0(h.total_vertices);
    e0[0] = 1.0;
    zero.residual = eigen_residual(h, TensorEigenpair{Complex{}, e0});
    zero.certified = zero.residual <= 1e-9;
    report.entries.push_back(std::move(zero));
  }

  for (const auto& c : collect(g, k, signed_enum, caps)) {
    SpectrumEntry entry;
    entry.lambda = c.lambda;
    entry.canonical = is_canonical(c.lambda, k);
    entry.beta = c.beta;
    entry.provenance = make_provenance(c.signing);
    LiftResult lifted = lift(g, k, c.signing, c.ep, c.root_index);
    entry.residual = lifted.residual;
    entry.certified = true;
    report.entries.push_back(std::move(entry));
  }

  if (signed_enum) {
    // Flag the entries the unsigned baseline cannot produce.
    auto baseline = collect(g, k, /*signed_enum=*/false, caps);
    for (auto& entry : report.entries) {
      if (entry.lambda == Complex{}) continue;
      bool found = false;
      for (const auto& c : baseline)
        if (std::abs(c.lambda - entry.lambda) <= kDedupTol) {
          found = true;
          break;
        }
      entry.statement1_only = !found;
    }
  }

  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     double ma = std::abs(a.lambda), mb = std::abs(b.lambda);
                     if (ma != mb) return ma > mb;
                     double aa = std::arg(a.lambda), ab = std::arg(b.lambda);
                     if (aa < 0) aa += 2 * std::numbers::pi;
                     if (ab < 0) ab += 2 * std::numbers::pi;
                     return aa < ab;
                   });
  return report;
}

}  // namespace

SpectrumReport distinct_eigenvalues(const Graph& g, int k, EnumCaps caps) {
  return build_report(g, k, /*signed_enum=*/true, caps);
}

SpectrumReport statement1_eigenvalues(const Graph& g, int k, EnumCaps caps) {
  return build_report(g, k, /*signed_enum=*/false, caps);
}

std::vector<Complex> compare_statements(const Graph& g, int k, EnumCaps caps) {
  auto report = distinct_eigenvalues(g, k, caps);
  std::vector<Complex> out;
  for (const auto& e : report.entries)
    if (e.statement1_only) out.push_back(e.lambda);
  return out;
}

std::pair<double, double> spectral_radius_check(const Graph& g, int k,
                                                EnumCaps caps) {
  auto report = distinct_eigenvalues(g, k, caps);
  double maxmod = 0.0;
  for (const auto& e : report.entries)
    maxmod = std::max(maxmod, std::abs(e.lambda));
  return {maxmod, std::pow(spectral_radius(g), 2.0 / k)};
}

CounterexampleOutcome run_counterexample() {
  std::ostringstream out;
  bool pass = true;
  auto check = [&](bool ok, const std::string& what) {
    out << (ok ? "  [ok]   " : "  [FAIL] ") << what << "\n";
    pass = pass && ok;
  };
  auto num = [](double v) {
    char buf[64];
    if (v == 0.0) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };

  Graph k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  out << "counterexample: K4 with edge {0,1} signed negative vs K4^(3)\n";

  SignedSubgraph k4minus{induced_subgraph(k4, 0b1111),
                         {-1, 1, 1, 1, 1, 1}};
  auto eig = sym_eig(adjacency_matrix(k4minus).matrix);

  const double sqrt5 = std::sqrt(5.0);
  const RealEigenpair* hit = nullptr;
  for (const auto& ep : eig)
    if (std::abs(ep.beta - sqrt5) <= 1e-9) hit = &ep;
  check(hit != nullptr, "K4^- has eigenvalue sqrt(5) = " + num(sqrt5));
  if (!hit) return {false, out.str()};
  out << "  beta = " << num(hit->beta) << "\n";

  // Angle between the computed eigenvector and (sqrt(5)-1, sqrt(5)-1, 2, 2).
  std::vector<double> target{sqrt5 - 1, sqrt5 - 1, 2, 2};
  double tn = 0, dot = 0;
  for (int i = 0; i < 4; ++i) tn += target[i] * target[i];
  tn = std::sqrt(tn);
  for (int i = 0; i < 4; ++i) dot += hit->y[i] * target[i] / tn;
  double perp = 0;
  for (int i = 0; i < 4; ++i) {
    double d = hit->y[i] - dot * target[i] / tn;
    perp += d * d;
  }
  double angle = std::atan2(std::sqrt(perp), std::abs(dot));
  check(angle <= 1e-8, "eigenvector parallel to (sqrt(5)-1, sqrt(5)-1, 2, 2), "
                       "angle = " + num(angle));

  LiftResult lifted = lift(k4, 3, k4minus, *hit, 0);
  double cbrt5 = std::cbrt(5.0);
  out << "  lift to K4^(3): lambda = " << num(lifted.pair.lambda.real())
      << (std::abs(lifted.pair.lambda.imag()) > 1e-12
              ? " + " + num(lifted.pair.lambda.imag()) + "i"
              : "")
      << ", residual = " << num(lifted.residual) << "\n";
  check(std::abs(lifted.pair.lambda - Complex{cbrt5, 0.0}) <= 1e-9,
        "lambda = 5^(1/3) = " + num(cbrt5));
  check(lifted.residual <= 1e-9, "tensor residual <= 1e-9");

  // Unsigned induced subgraphs of K4 are complete graphs with integer
  // spectra; none reaches beta^2 = 5.
  std::set<long long> distinct_beta_millionths;
  bool any_sqrt5 = false;
  std::vector<double> k4_spectrum;
  for (const auto& h : enumerate_induced_subgraphs(k4)) {
    if (h.vertex_count() == 0) continue;
    SignedSubgraph all_pos{h, std::vector<int>(h.edge_count(), 1)};
    for (const auto& ep : sym_eig(adjacency_matrix(all_pos).matrix)) {
      distinct_beta_millionths.insert(std::llround(ep.beta * 1e6));
      if (std::abs(ep.beta * ep.beta - 5.0) <= 1e-6) any_sqrt5 = true;
      if (h.vertex_count() == 4) k4_spectrum.push_back(ep.beta);
    }
  }
  std::sort(k4_spectrum.rbegin(), k4_spectrum.rend());
  out << "  K4 spectrum:";
  for (double b : k4_spectrum) out << " " << num(std::round(b * 1e9) / 1e9);
  out << "\n  unsigned induced-subgraph eigenvalues:";
  for (long long b : distinct_beta_millionths)
    out << " " << num(static_cast<double>(b) / 1e6);
  out << "\n";
  check(!any_sqrt5, "no unsigned induced subgraph has beta^2 = 5");

  out << (pass ? "PASS" : "FAIL") << "\n";
  return {pass, out.str()};
}

}  // namespace hypower
