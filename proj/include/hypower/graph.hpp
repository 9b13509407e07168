#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hypower/errors.hpp"

namespace hypower {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. No self-loops, no duplicate
// edges. n and m are capped at 64 so vertex and edge subsets fit in one
// 64-bit mask.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
};

// Graph plus a per-edge sign in {+1, -1}, aligned with the edge list.
struct SignedGraph {
  Graph graph;
  std::vector<int> signs;
};

// A subgraph of a parent graph, identified by a vertex mask and a mask of
// parent edge indices. For an induced handle the edge mask is exactly the
// parent edges inside the vertex mask.
struct SubgraphHandle {
  const Graph* parent = nullptr;
  std::uint64_t vertex_set = 0;
  std::uint64_t edge_set = 0;

  int vertex_count() const;
  int edge_count() const;
  // Global vertex / edge indices in ascending order.
  std::vector<int> vertices() const;
  std::vector<int> edge_indices() const;
  bool is_induced() const;
};

// A signing of the edges selected by a handle. signs is aligned with the
// handle's edge indices in ascending order.
struct SignedSubgraph {
  SubgraphHandle handle;
  std::vector<int> signs;
};

// Edge-list text format: first non-comment line "n m", then m lines
// "u v" (0-based). '#' starts a comment. Throws ParseError naming the line.
Graph parse_graph(std::string_view text);

// Same format with a trailing sign token "+1" or "-1" per edge line.
SignedGraph parse_signed_graph(std::string_view text);

SubgraphHandle induced_subgraph(const Graph& g, std::uint64_t vertex_set);

// Handle over the given parent edge indices; vertex set is the union of
// their endpoints (isolated vertices excluded).
SubgraphHandle edge_subgraph(const Graph& g, std::uint64_t edge_set);

// Flip the sign of every edge with exactly one endpoint in the given set.
SignedGraph switch_signs(const SignedGraph& sg, std::uint64_t vertex_set);

// m - n + c over the handle's vertex and edge sets.
int cycle_rank(const SubgraphHandle& h);

// One representative signing per switching class: a spanning forest is
// fixed to +1 and all sign patterns on the remaining edges are emitted, in
// lexicographic order (all-positive first). Throws CapError when the cycle
// rank exceeds the cap.
std::vector<SignedSubgraph> enumerate_signings_mod_switching(
    const SubgraphHandle& h, int max_cycle_rank = 12);

// All 2^n induced handles in ascending mask order (the empty one included).
std::vector<SubgraphHandle> enumerate_induced_subgraphs(const Graph& g,
                                                        int max_vertices = 16);

// All 2^m edge-subset handles in ascending mask order.
std::vector<SubgraphHandle> enumerate_edge_subsets(const Graph& g,
                                                   int max_edges = 16);

// Partition of the handle's vertex set by connectivity within its edge set.
std::vector<SubgraphHandle> connected_components(const SubgraphHandle& h);

}  // namespace hypower
