#include "hypower/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>
#include <string>

namespace hypower {

namespace {

std::string line_msg(int line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

// Strips comments, splits into whitespace tokens; returns (line_no, tokens)
// for every non-empty line.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(
    std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream iss{std::string(line)};
    std::vector<std::string> toks;
    for (std::string t; iss >> t;) toks.push_back(t);
    if (!toks.empty()) out.emplace_back(line_no, std::move(toks));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_msg(line_no, "expected integer, got '" + tok + "'"));
  return value;
}

struct ParsedEdges {
  Graph graph;
  std::vector<int> signs;
};

ParsedEdges parse_edges(std::string_view text, bool want_signs) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input, expected header 'n m'");
  auto& [hline, htoks] = lines.front();
  if (htoks.size() != 2)
    throw ParseError(line_msg(hline, "expected header 'n m'"));
  int n = parse_int(htoks[0], hline);
  int m = parse_int(htoks[1], hline);
  if (n < 0 || m < 0) throw ParseError(line_msg(hline, "negative n or m"));
  if (n > 64 || m > 64)
    throw ParseError(line_msg(hline, "n and m are limited to 64"));
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                     std::to_string(lines.size() - 1));

  ParsedEdges out;
  out.graph.n = n;
  std::set<std::pair<int, int>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto& [ln, toks] = lines[i];
    size_t expected = want_signs ? 3 : 2;
    if (toks.size() != expected)
      throw ParseError(line_msg(
          ln, want_signs ? "expected 'u v s'" : "expected 'u v'"));
    int u = parse_int(toks[0], ln);
    int v = parse_int(toks[1], ln);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_msg(ln, "endpoint out of range [0, n)"));
    if (u == v) throw ParseError(line_msg(ln, "self-loop"));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert({e.u, e.v}).second)
      throw ParseError(line_msg(ln, "duplicate edge"));
    out.graph.edges.push_back(e);
    if (want_signs) {
      if (toks[2] == "+1")
        out.signs.push_back(1);
      else if (toks[2] == "-1")
        out.signs.push_back(-1);
      else
        throw ParseError(
            line_msg(ln, "bad sign token '" + toks[2] + "', expected +1 or -1"));
    }
  }
  return out;
}

}  // namespace

int SubgraphHandle::vertex_count() const { return std::popcount(vertex_set); }

int SubgraphHandle::edge_count() const { return std::popcount(edge_set); }

std::vector<int> SubgraphHandle::vertices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (vertex_set >> i & 1) out.push_back(i);
  return out;
}

std::vector<int> SubgraphHandle::edge_indices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (edge_set >> i & 1) out.push_back(i);
  return out;
}

bool SubgraphHandle::is_induced() const {
  return parent != nullptr &&
         edge_set == induced_subgraph(*parent, vertex_set).edge_set;
}

Graph parse_graph(std::string_view text) {
  return parse_edges(text, /*want_signs=*/false).graph;
}

SignedGraph parse_signed_graph(std::string_view text) {
  auto parsed = parse_edges(text, /*want_signs=*/true);
  return SignedGraph{std::move(parsed.graph), std::move(parsed.signs)};
}

SubgraphHandle induced_subgraph(const Graph& g, std::uint64_t vertex_set) {
  SubgraphHandle h{&g, vertex_set, 0};
  for (int i = 0; i < g.m(); ++i) {
    const Edge& e = g.edges[i];
    if ((vertex_set >> e.u & 1) && (vertex_set >> e.v & 1))
      h.edge_set |= std::uint64_t{1} << i;
  }
  return h;
}

SubgraphHandle edge_subgraph(const Graph& g, std::uint64_t edge_set) {
  SubgraphHandle h{&g, 0, edge_set};
  for (int i = 0; i < g.m(); ++i)
    if (edge_set >> i & 1) {
      h.vertex_set |= std::uint64_t{1} << g.edges[i].u;
      h.vertex_set |= std::uint64_t{1} << g.edges[i].v;
    }
  return h;
}

SignedGraph switch_signs(const SignedGraph& sg, std::uint64_t vertex_set) {
  SignedGraph out = sg;
  for (int i = 0; i < sg.graph.m(); ++i) {
    const Edge& e = sg.graph.edges[i];
    bool cu = vertex_set >> e.u & 1;
    bool cv = vertex_set >> e.v & 1;
    if (cu != cv) out.signs[i] = -out.signs[i];
  }
  return out;
}

int cycle_rank(const SubgraphHandle& h) {
  int n = h.vertex_count();
  int m = h.edge_count();
  int c = static_cast<int>(connected_components(h).size());
  return m - n + c;
}

std::vector<SignedSubgraph> enumerate_signings_mod_switching(
    const SubgraphHandle& h, int max_cycle_rank) {
  // Union-find spanning forest over the handle's edges in ascending order.
  const Graph& g = *h.parent;
  std::vector<int> uf(g.n);
  for (int i = 0; i < g.n; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };

  auto edge_idx = h.edge_indices();
  std::vector<int> loose;  // non-forest edges, as positions within edge_idx
  for (size_t pos = 0; pos < edge_idx.size(); ++pos) {
    const Edge& e = g.edges[edge_idx[pos]];
    int ru = find(e.u), rv = find(e.v);
    if (ru == rv)
      loose.push_back(static_cast<int>(pos));
    else
      uf[ru] = rv;
  }

  int rank = static_cast<int>(loose.size());
  if (rank > max_cycle_rank)
    throw CapError("cycle rank " + std::to_string(rank) +
                   " exceeds cap " + std::to_string(max_cycle_rank));

  std::vector<SignedSubgraph> out;
  out.reserve(std::size_t{1} << rank);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << rank);
       ++pattern) {
    SignedSubgraph ss{h, std::vector<int>(edge_idx.size(), 1)};
    for (int b = 0; b < rank; ++b)
      if (pattern >> b & 1) ss.signs[loose[b]] = -1;
    out.push_back(std::move(ss));
  }
  return out;
}

std::vector<SubgraphHandle> enumerate_induced_subgraphs(const Graph& g,
                                                        int max_vertices) {
  if (g.n > max_vertices)
    throw CapError("vertex count " + std::to_string(g.n) + " exceeds cap " +
                   std::to_string(max_vertices));
  std::vector<SubgraphHandle> out;
  out.reserve(std::size_t{1} << g.n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s)
    out.push_back(induced_subgraph(g, s));
  return out;
}

std::vector<SubgraphHandle> enumerate_edge_subsets(const Graph& g,
                                                   int max_edges) {
  if (g.m() > max_edges)
    throw CapError("edge count " + std::to_string(g.m()) + " exceeds cap " +
                   std::to_string(max_edges));
  std::vector<SubgraphHandle> out;
  out.reserve(std::size_t{1} << g.m());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.m()); ++s)
    out.push_back(edge_subgraph(g, s));
  return out;
}

std::vector<SubgraphHandle> connected_components(const SubgraphHandle& h) {
  const Graph& g = *h.parent;
  std::vector<int> uf(g.n);
  for (int i = 0; i < g.n; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int i = 0; i < g.m(); ++i)
    if (h.edge_set >> i & 1) uf[find(g.edges[i].u)] = find(g.edges[i].v);

  std::vector<SubgraphHandle> out;
  std::vector<int> root_slot(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (!(h.vertex_set >> v & 1)) continue;
    int r = find(v);
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<int>(out.size());
      out.push_back(SubgraphHandle{&g, 0, 0});
    }
    out[root_slot[r]].vertex_set |= std::uint64_t{1} << v;
  }
  for (int i = 0; i < g.m(); ++i)
    if (h.edge_set >> i & 1)
      out[root_slot[find(g.edges[i].u)]].edge_set |= std::uint64_t{1} << i;
  return out;
}

}  // namespace hypower
