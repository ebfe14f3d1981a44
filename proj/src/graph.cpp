#include "submatch/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "submatch/rng.hpp"

namespace submatch {

Graph Graph::from_edges(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges) {
  Graph g;
  g.n_ = n;
  g.edge_set_.reserve(edges.size() * 2);
  for (size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u >= n || v >= n)
      throw std::invalid_argument("edge " + std::to_string(e) + ": vertex id out of range");
    if (u == v)
      throw std::invalid_argument("edge " + std::to_string(e) + ": self-loop");
    if (!g.edge_set_.insert(pack_pair(u, v)).second)
      throw std::invalid_argument("edge " + std::to_string(e) + ": duplicate edge");
  }
  g.edges_ = std::move(edges);

  std::vector<uint32_t> deg(n, 0);
  for (auto [u, v] : g.edges_) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * g.edges_.size());
  std::vector<uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Filling in edge order keeps per-vertex adjacency in insertion order.
  for (uint32_t e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.adj_[fill[u]++] = {v, e};
    g.adj_[fill[v]++] = {u, e};
  }
  return g;
}

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& what) {
  throw std::runtime_error("edge list parse error at line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::string line;
  size_t lineno = 0;

  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      return true;
    }
    ++lineno;
    return false;
  };

  if (!next_content_line()) parse_fail(1, "missing header \"n m\"");
  uint64_t n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      parse_fail(lineno, "expected header \"n m\"");
  }
  if (n > UINT32_MAX || m > UINT32_MAX) parse_fail(1, "n or m too large");

  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(m);
  std::unordered_set<uint64_t> seen;
  seen.reserve(m * 2);
  for (uint64_t e = 0; e < m; ++e) {
    if (!next_content_line()) parse_fail(lineno, "missing edge line");
    std::istringstream es(line);
    uint64_t u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) parse_fail(lineno, "expected \"u v\"");
    if (u >= n || v >= n) parse_fail(lineno, "vertex id out of range");
    if (u == v) parse_fail(lineno, "self-loop");
    if (!seen.insert(Graph::pack_pair(static_cast<uint32_t>(u), static_cast<uint32_t>(v))).second)
      parse_fail(lineno, "duplicate edge");
    edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
  }
  return Graph::from_edges(static_cast<uint32_t>(n), std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph gen_gnp(uint32_t n, double p, uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p must be in [0,1]");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  if (p > 0.0) {
    SplitMix64 rng(derive_seed(seed, 0x676e70 /* "gnp" */));
    if (p >= 1.0) {
      for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
      // Integer threshold keeps the draw exact and platform-independent.
      const auto threshold = static_cast<uint64_t>(p * 0x1.0p64);
      for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
          if (rng.next() < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_complete_bipartite(uint32_t a, uint32_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: parts must be nonempty");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(static_cast<size_t>(a) * b);
  for (uint32_t u = 0; u < a; ++u)
    for (uint32_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, std::move(edges));
}

Graph gen_structured(StructuredKind kind, uint32_t n) {
  if (n < 1) throw std::invalid_argument("gen_structured: n must be >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  switch (kind) {
    case StructuredKind::path:
      for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case StructuredKind::cycle:
      if (n < 3) throw std::invalid_argument("gen_structured: cycle needs n >= 3");
      for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case StructuredKind::star:
      for (uint32_t v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case StructuredKind::perfect_matching:
      if (n % 2 != 0) throw std::invalid_argument("gen_structured: perfect_matching needs even n");
      for (uint32_t v = 0; v < n; v += 2) edges.emplace_back(v, v + 1);
      break;
  }
  return Graph::from_edges(n, std::move(edges));
}

StructuredKind structured_kind_from_name(const std::string& name) {
  if (name == "path") return StructuredKind::path;
  if (name == "cycle") return StructuredKind::cycle;
  if (name == "star") return StructuredKind::star;
  if (name == "pm" || name == "perfect_matching") return StructuredKind::perfect_matching;
  throw std::invalid_argument("unknown structured graph kind: " + name);
}

uint32_t degree_query(const Graph& g, uint32_t v, AccessCounter& counter) {
  if (v >= g.vertex_count()) throw std::out_of_range("degree_query: vertex out of range");
  ++counter.degree_queries;
  return g.degree(v);
}

std::pair<uint32_t, uint32_t> neighbor_query(const Graph& g, uint32_t v, uint64_t i,
                                             AccessCounter& counter) {
  if (v >= g.vertex_count()) throw std::out_of_range("neighbor_query: vertex out of range");
  if (i < 1 || i > g.degree(v)) throw std::out_of_range("neighbor_query: index out of range");
  ++counter.neighbor_queries;
  return g.neighbor_entry(v, static_cast<uint32_t>(i - 1));
}

bool pair_query(const Graph& g, uint32_t u, uint32_t v, AccessCounter& counter) {
  if (u >= g.vertex_count() || v >= g.vertex_count())
    throw std::out_of_range("pair_query: vertex out of range");
  ++counter.pair_queries;
  return g.adjacent(u, v);
}

GraphStats stats(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("stats: empty vertex set");
  GraphStats s;
  s.avg_degree = Rational(2 * static_cast<int64_t>(g.edge_count()), g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    s.max_degree = std::max(s.max_degree, g.degree(v));
  return s;
}

GraphListView::GraphListView(const Graph& g, AccessCounter& counter, uint64_t ladder_bound)
    : g_(&g), counter_(&counter), ladder_bound_(ladder_bound) {
  if (ladder_bound_ == 0) {
    uint32_t md = 0;
    for (uint32_t v = 0; v < g.vertex_count(); ++v) md = std::max(md, g.degree(v));
    ladder_bound_ = std::max<uint64_t>(1, md);
  }
}

uint64_t GraphListView::degree(uint64_t v) {
  return degree_query(*g_, static_cast<uint32_t>(v), *counter_);
}

NeighborRef GraphListView::neighbor(uint64_t v, uint64_t i) {
  auto [nbr, eid] = neighbor_query(*g_, static_cast<uint32_t>(v), i, *counter_);
  return {nbr, eid};
}

}  // namespace submatch
