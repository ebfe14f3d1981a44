#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace submatch {

// Thrown when an operation refuses an input that exceeds its design budget
// (exact oracles on large n, permutation enumeration on large m, ...).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tally of queries charged against a query model. Monotone within a session;
// sessions own their counter and aggregate afterwards.
struct AccessCounter {
  uint64_t degree_queries = 0;
  uint64_t neighbor_queries = 0;
  uint64_t pair_queries = 0;

  uint64_t total() const { return degree_queries + neighbor_queries + pair_queries; }

  AccessCounter& operator+=(const AccessCounter& o) {
    degree_queries += o.degree_queries;
    neighbor_queries += o.neighbor_queries;
    pair_queries += o.pair_queries;
    return *this;
  }
};

// Exact rational, reduced, denominator > 0. Covers the handful of exact
// quantities the library reports (average degree, the Vizing floor).
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
};

struct GraphStats {
  Rational avg_degree;   // exactly 2m/n
  uint32_t max_degree = 0;
};

// Immutable simple undirected graph. Vertex and edge ids are dense 0-based;
// adjacency order is fixed at construction (insertion order) and the query
// API below indexes it 1-based. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity (no self-loops, no parallel edges) and id ranges.
  static Graph from_edges(uint32_t n, std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t vertex_count() const { return n_; }
  uint32_t edge_count() const { return static_cast<uint32_t>(edges_.size()); }

  uint32_t degree(uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }

  // i is 0-based here; the instrumented wrapper is 1-based.
  std::pair<uint32_t, uint32_t> neighbor_entry(uint32_t v, uint32_t i) const {
    return adj_[offsets_[v] + i];
  }

  std::pair<uint32_t, uint32_t> edge(uint32_t e) const { return edges_[e]; }
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }

  bool adjacent(uint32_t u, uint32_t v) const {
    if (u == v) return false;
    return edge_set_.count(pack_pair(u, v)) != 0;
  }

  static uint64_t pack_pair(uint32_t u, uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(u) << 32) | v;
  }

 private:
  uint32_t n_ = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
  std::vector<uint32_t> offsets_;                       // CSR offsets, size n+1
  std::vector<std::pair<uint32_t, uint32_t>> adj_;      // (neighbor, edge id)
  std::unordered_set<uint64_t> edge_set_;               // packed canonical pairs
};

// ---- file I/O ----

// Format: first line "n m"; then m lines "u v", 0-indexed. Parse errors name
// the offending line.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

// ---- generators (seed-deterministic, same graph on every platform) ----

Graph gen_gnp(uint32_t n, double p, uint64_t seed);
Graph gen_complete_bipartite(uint32_t a, uint32_t b);

enum class StructuredKind { path, cycle, star, perfect_matching };
Graph gen_structured(StructuredKind kind, uint32_t n);
StructuredKind structured_kind_from_name(const std::string& name);

// ---- instrumented query wrappers ----

// Adjacency list model: degree of v.
uint32_t degree_query(const Graph& g, uint32_t v, AccessCounter& counter);

// Adjacency list model: i-th neighbor of v, 1 <= i <= deg(v). Returns
// (neighbor id, edge id).
std::pair<uint32_t, uint32_t> neighbor_query(const Graph& g, uint32_t v, uint64_t i,
                                             AccessCounter& counter);

// Adjacency matrix model: is {u,v} an edge? pair_query(v,v) is false, not an
// error: the graph is simple.
bool pair_query(const Graph& g, uint32_t u, uint32_t v, AccessCounter& counter);

GraphStats stats(const Graph& g);

// ---- adjacency-list view abstraction ----

struct NeighborRef {
  uint64_t vertex;
  uint64_t edge_key;
};

// Uniform adjacency-list query surface for the oracle machinery. Both the
// concrete Graph and the virtual H of the matrix reduction answer these;
// every call is charged to the view's AccessCounter.
class AdjacencyView {
 public:
  virtual ~AdjacencyView() = default;
  virtual uint64_t vertex_count() const = 0;
  virtual uint64_t degree(uint64_t v) = 0;
  // 1-based position; pre: 1 <= i <= degree(v).
  virtual NeighborRef neighbor(uint64_t v, uint64_t i) = 0;
  // Upper bound on the maximum degree, used to size the rank interval ladder.
  // Metadata, not a query.
  virtual uint64_t max_degree_bound() const = 0;
};

// List-model view of a Graph. Edge keys are edge ids. The ladder bound
// defaults to the exact maximum degree; estimators that may not afford a
// degree scan pass n-1 instead.
class GraphListView final : public AdjacencyView {
 public:
  GraphListView(const Graph& g, AccessCounter& counter, uint64_t ladder_bound = 0);

  uint64_t vertex_count() const override { return g_->vertex_count(); }
  uint64_t degree(uint64_t v) override;
  NeighborRef neighbor(uint64_t v, uint64_t i) override;
  uint64_t max_degree_bound() const override { return ladder_bound_; }

 private:
  const Graph* g_;
  AccessCounter* counter_;
  uint64_t ladder_bound_;
};

}  // namespace submatch
