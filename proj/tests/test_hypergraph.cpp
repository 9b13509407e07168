#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hypower/hypergraph.hpp"

using namespace hypower;

TEST_CASE("power_hypergraph structure") {
  Graph k2 = parse_graph("2 1\n0 1");
  auto h3 = power_hypergraph(k2, 3);
  CHECK(h3.total_vertices == 3);
  REQUIRE(h3.hyperedges.size() == 1);
  CHECK(h3.hyperedges[0] == std::vector<int>{0, 1, 2});

  auto h5 = power_hypergraph(k2, 5);
  CHECK(h5.hyperedges[0] == std::vector<int>{0, 1, 2, 3, 4});

  Graph k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  auto h = power_hypergraph(k4, 3);
  CHECK(h.total_vertices == 10);
  CHECK(h.hyperedges.size() == 6);
  // disjoint added blocks, each added vertex in exactly one hyperedge
  std::vector<int> times_seen(h.total_vertices, 0);
  for (const auto& he : h.hyperedges)
    for (int v : he) ++times_seen[v];
  for (int v = k4.n; v < h.total_vertices; ++v) CHECK(times_seen[v] == 1);

  CHECK_THROWS_AS(power_hypergraph(k2, 2), std::invalid_argument);
  CHECK_THROWS_AS(power_hypergraph(k4, 1000), CapError);
}

TEST_CASE("tensor_apply on K2^(3)") {
  auto h = power_hypergraph(parse_graph("2 1\n0 1"), 3);
  CHECK(tensor_apply(h, {1, 1, 1}) == CVector{1, 1, 1});
  CHECK(tensor_apply(h, {0, 0, 0}) == CVector{0, 0, 0});
  CHECK(tensor_apply(h, {1, 1, 0}) == CVector{0, 0, 1});
  CHECK_THROWS_AS(tensor_apply(h, {1, 1}), std::invalid_argument);
}

TEST_CASE("eigen_residual examples") {
  auto h = power_hypergraph(parse_graph("2 1\n0 1"), 3);
  CHECK(eigen_residual(h, {Complex{}, {1, 0, 0}}) == 0.0);
  CHECK(eigen_residual(h, {Complex{1, 0}, {1, 1, 1}}) == 0.0);
  CHECK(eigen_residual(h, {Complex{1, 0}, {1, 1, 0}}) == 1.0);
  CHECK_THROWS_AS(eigen_residual(h, {Complex{1, 0}, {0, 0, 0}}),
                  std::invalid_argument);

  CHECK(is_eigenpair(h, {Complex{}, {1, 0, 0}}));
  CHECK(is_eigenpair(h, {Complex{1, 0}, {1, 1, 1}}));
  CHECK_FALSE(is_eigenpair(h, {Complex{1, 0}, {1, 1, 0}}));
}

TEST_CASE("zero eigenvalue: every basis vector gives residual exactly 0") {
  Graph k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  for (int k = 3; k <= 5; ++k) {
    auto h = power_hypergraph(k4, k);
    for (int v = 0; v < h.total_vertices; ++v) {
      CVector e(h.total_vertices);
      e[v] = 1.0;
      CHECK(eigen_residual(h, {Complex{}, e}) == 0.0);
    }
  }
}

TEST_CASE("eigen_residual is scale-invariant for unit-modulus factors") {
  auto h = power_hypergraph(parse_graph("3 3\n0 1\n0 2\n1 2"), 4);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-1, 1);
  CVector x(h.total_vertices);
  for (auto& v : x) v = Complex{dist(rng), dist(rng)};
  TensorEigenpair p{Complex{0.7, 0.2}, x};
  double base = eigen_residual(h, p);
  for (int trial = 0; trial < 10; ++trial) {
    Complex c = std::polar(1.0, dist(rng) * 3.14159);
    CVector y = x;
    for (auto& v : y) v *= c;
    CHECK(std::abs(eigen_residual(h, {p.lambda, y}) - base) < 1e-12);
  }
}
