#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "graph_zoo.hpp"
#include "hypower/lift_project.hpp"

using namespace hypower;

namespace {

const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3";

SignedSubgraph full_signing(const Graph& g, std::vector<int> signs) {
  return {induced_subgraph(g, (std::uint64_t{1} << g.n) - 1), std::move(signs)};
}

RealEigenpair top_eigenpair(const SignedSubgraph& ss) {
  return sym_eig(adjacency_matrix(ss).matrix)[0];
}

}  // namespace

TEST_CASE("odd_root_pair solves both identities") {
  CHECK(odd_root_pair({1, 0}, {1, 0}, 3) == Complex{1, 0});
  Complex a{0.3, -0.8}, b;
  {
    // force b^2 = a^k with k = 5
    Complex ak{1, 0};
    for (int i = 0; i < 5; ++i) ak *= a;
    b = std::sqrt(ak);
  }
  Complex z = odd_root_pair(a, b, 5);
  CHECK(std::abs(z * z - a) < 1e-12);
  Complex zk{1, 0};
  for (int i = 0; i < 5; ++i) zk *= z;
  CHECK(std::abs(zk - b) < 1e-12);
}

TEST_CASE("lift: trivial K2 case") {
  Graph k2 = parse_graph("2 1\n0 1");
  double s = 1.0 / std::sqrt(2.0);
  auto res = lift(k2, 3, full_signing(k2, {1}), {1.0, {s, s}}, 0);
  CHECK(std::abs(res.pair.lambda - Complex{1, 0}) < 1e-12);
  CHECK(res.residual <= 1e-12);
  // all three coordinates share modulus (proportional to (1,1,1) up to phase)
  double m0 = std::abs(res.pair.x[0]);
  for (int i = 1; i < 3; ++i) CHECK(std::abs(res.pair.x[i]) ==
                                    doctest::Approx(m0).epsilon(1e-12));
}

TEST_CASE("lift: the K4^- counterexample pair") {
  Graph k4 = parse_graph(kK4);
  SignedSubgraph k4m = full_signing(k4, {-1, 1, 1, 1, 1, 1});
  auto ep = top_eigenpair(k4m);
  REQUIRE(ep.beta == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

  auto r0 = lift(k4, 3, k4m, ep, 0);
  CHECK(std::abs(r0.pair.lambda - Complex{std::cbrt(5.0), 0}) < 1e-9);
  CHECK(r0.residual <= 1e-9);

  auto r1 = lift(k4, 3, k4m, ep, 1);
  Complex expected = std::cbrt(5.0) * std::polar(1.0, 2 * 3.14159265358979323846 / 3);
  CHECK(std::abs(r1.pair.lambda - expected) < 1e-9);
  CHECK(r1.residual <= 1e-9);
}

TEST_CASE("lift: preconditions") {
  Graph k4 = parse_graph(kK4);
  SignedSubgraph sub = full_signing(k4, {1, 1, 1, 1, 1, 1});
  auto ep = top_eigenpair(sub);
  CHECK_THROWS_AS(lift(k4, 3, sub, {0.0, ep.y}, 0), std::invalid_argument);
  CHECK_THROWS_AS(lift(k4, 3, sub, ep, 3), std::invalid_argument);

  // k = 3 demands an induced handle: {0,1,2} with only the edge {0,1}
  SignedSubgraph non_induced{SubgraphHandle{&k4, 0b0111, 0b000001}, {1}};
  auto ep2 = top_eigenpair(non_induced);
  CHECK_THROWS_AS(lift(k4, 3, non_induced, ep2, 0), std::invalid_argument);
  CHECK_NOTHROW(lift(k4, 4, non_induced, ep2, 0));

  // a plain edge subgraph on {0,1} is induced and passes at k = 3
  SignedSubgraph single{edge_subgraph(k4, 0b000001), {1}};
  CHECK_NOTHROW(lift(k4, 3, single, top_eigenpair(single), 0));
}

TEST_CASE("lift: even k with positive and negative K2") {
  Graph k2 = parse_graph("2 1\n0 1");
  double s = 1.0 / std::sqrt(2.0);
  auto pos = lift(k2, 4, full_signing(k2, {1}), {1.0, {s, s}}, 0);
  CHECK(pos.residual <= 1e-12);
  for (Complex v : pos.pair.x) CHECK(std::abs(v.imag()) < 1e-12);  // all real

  auto neg = lift(k2, 4, full_signing(k2, {-1}), {-1.0, {s, s}}, 0);
  CHECK(neg.residual <= 1e-9);
}

TEST_CASE("lift: key identity at every added vertex (n <= 4 sweep)") {
  for (const auto& g : zoo::graphs_up_to(4, true)) {
    for (int k : {3, 4, 5}) {
      auto h = power_hypergraph(g, k);
      auto handles = (k == 3) ? enumerate_induced_subgraphs(g)
                              : enumerate_edge_subsets(g);
      for (const auto& hd : handles) {
        if (hd.vertex_count() == 0) continue;
        for (const auto& ss : enumerate_signings_mod_switching(hd)) {
          auto sm = adjacency_matrix(ss);
          auto local = sm.vertices;
          for (const auto& ep : sym_eig(sm.matrix)) {
            if (std::abs(ep.beta) <= 1e-8) continue;
            auto res = lift(g, k, ss, ep, 0);
            const auto& x = res.pair.x;
            auto edge_idx = hd.edge_indices();
            for (size_t ei = 0; ei < edge_idx.size(); ++ei) {
              const Edge& e = g.edges[edge_idx[ei]];
              int li = -1, lj = -1;
              for (size_t t = 0; t < local.size(); ++t) {
                if (local[t] == e.u) li = static_cast<int>(t);
                if (local[t] == e.v) lj = static_cast<int>(t);
              }
              Complex xn{1, 0};
              int start = h.added_block_start(edge_idx[ei]);
              for (int t = 0; t < k - 2; ++t) xn *= x[start + t];
              for (int t = 0; t < k - 2; ++t) {
                Complex xv = x[start + t];
                Complex xvk{1, 0};
                for (int p = 0; p < k; ++p) xvk *= xv;
                double sgn = ss.signs[ei];
                Complex rhs1 = sgn * ep.y[li] * ep.y[lj] / ep.beta;
                Complex rhs2 = x[e.u] * x[e.v] * xn / res.pair.lambda;
                CHECK(std::abs(xvk - rhs1) <= 1e-10);
                CHECK(std::abs(xvk - rhs2) <= 1e-10);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("lift: odd-k sign-root styles agree on certification") {
  Graph k4 = parse_graph(kK4);
  SignedSubgraph k4m = full_signing(k4, {-1, 1, 1, 1, 1, 1});
  auto ep = top_eigenpair(k4m);
  for (int k : {3, 5}) {
    for (int ri = 0; ri < k; ++ri) {
      auto real_style = lift(k4, k, k4m, ep, ri, OddSignStyle::Real);
      auto principal = lift(k4, k, k4m, ep, ri, OddSignStyle::PrincipalRoot);
      CHECK(real_style.residual <= 1e-9);
      CHECK(principal.residual <= 1e-9);
      CHECK(std::abs(real_style.pair.lambda - principal.pair.lambda) < 1e-12);
    }
  }
}

TEST_CASE("project: recovers K2 with sign +1 from (1, (1,1,1))") {
  Graph k2 = parse_graph("2 1\n0 1");
  auto res = project(k2, 3, {Complex{1, 0}, {1, 1, 1}});
  CHECK(res.support == std::vector<int>{0, 1});
  CHECK(res.subgraph.signs == std::vector<int>{1});
  CHECK(std::abs(res.beta * res.beta - Complex{1, 0}) < 1e-12);
  CHECK(res.relation_residual <= 1e-12);
}

TEST_CASE("project: zero lambda is rejected") {
  Graph k2 = parse_graph("2 1\n0 1");
  CHECK_THROWS_AS(project(k2, 3, {Complex{}, {1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("project: uncertified input is rejected") {
  Graph k2 = parse_graph("2 1\n0 1");
  CHECK_THROWS_AS(project(k2, 3, {Complex{1, 0}, {1, 1, 0.4}}), NumericError);
}

TEST_CASE("project(lift): K4^- round trip") {
  Graph k4 = parse_graph(kK4);
  SignedSubgraph k4m = full_signing(k4, {-1, 1, 1, 1, 1, 1});
  auto ep = top_eigenpair(k4m);
  auto lifted = lift(k4, 3, k4m, ep, 0);
  auto res = project(k4, 3, lifted.pair);

  CHECK(res.support == std::vector<int>{0, 1, 2, 3});
  // one negative edge up to switching: odd number of negatives on each
  // triangle through the negative edge is switching-invariant; check via
  // spectrum instead, which is the invariant that matters.
  auto eig = sym_eig(adjacency_matrix(res.subgraph).matrix);
  bool has_sqrt5 = false;
  for (const auto& e : eig)
    if (std::abs(e.beta - std::sqrt(5.0)) < 1e-8 ||
        std::abs(e.beta + std::sqrt(5.0)) < 1e-8)
      has_sqrt5 = true;
  CHECK(has_sqrt5);
  CHECK(std::abs(res.beta * res.beta - Complex{5.0, 0}) < 1e-8);
  CHECK(res.relation_residual <= 1e-8);
}
