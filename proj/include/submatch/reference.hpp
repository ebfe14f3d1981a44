#pragma once

#include <cstdint>
#include <vector>

#include "submatch/graph.hpp"
#include "submatch/rank_source.hpp"

namespace submatch {

struct Matching {
  std::vector<uint32_t> edges;    // edge ids, ascending
  std::vector<uint8_t> matched;   // per-vertex flag

  size_t size() const { return edges.size(); }
};

// Ground-truth greedy maximal matching: iterate edges in increasing rank,
// add every edge whose endpoints are both free. Needs every rank, so the
// source must be explicit or fully revealed.
Matching greedy_matching(const Graph& g, RankSource& ranks);

struct RoundProfile {
  uint32_t rho = 0;                       // rounds until the edge set empties
  std::vector<uint32_t> round_of_edge;    // 1-based removal round per edge
  Matching matching;
};

// Parallel form: each round matches every live local-minimum edge (strictly
// smallest rank among live incident edges) and removes the touched vertices.
// The matching is exactly the sequential one.
RoundProfile parallel_rounds(const Graph& g, RankSource& ranks);

// Exact oracles for acceptance-scale graphs (n <= 24); refuse beyond.
uint32_t exact_maximum_matching(const Graph& g);
uint32_t exact_min_vertex_cover(const Graph& g);

// Per-permutation behavior of greedy matching, exhaustively over all m!
// orders (m <= 8). Bitmask fields index by edge id / vertex id.
struct PermutationRecord {
  std::vector<uint32_t> order;  // edge ids in processing order
  uint32_t matching_mask = 0;
  uint32_t matched_vertices_mask = 0;
  uint32_t rho = 0;
};
std::vector<PermutationRecord> enumerate_permutation_behavior(const Graph& g);

// n*dbar/(4*Delta), an exact lower bound on the maximum matching size.
// Zero when the graph has no edges.
Rational vizing_floor(const GraphStats& s, uint64_t n);

}  // namespace submatch
