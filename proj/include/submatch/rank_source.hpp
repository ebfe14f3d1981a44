#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "submatch/graph.hpp"
#include "submatch/rng.hpp"

namespace submatch {

// Rank of an edge: a uint64 fixed-point fraction of 2^64 plus the edge key as
// tiebreak. Every ordering comparison in the project goes through this one
// total order, so runs stay valid permutations even under rank collisions.
struct RankValue {
  uint64_t r = 0;
  uint64_t tiebreak = 0;

  friend bool operator==(const RankValue& a, const RankValue& b) {
    return a.r == b.r && a.tiebreak == b.tiebreak;
  }
  friend bool operator<(const RankValue& a, const RankValue& b) {
    return a.r != b.r ? a.r < b.r : a.tiebreak < b.tiebreak;
  }
};

// Dyadic partition of [0,1): I_0 = [0, 1/D'), I_i = [2^{i-1}/D', 2^i/D'),
// where D' is the smallest power of two >= the degree bound. Boundaries are
// exact in u64 fixed point; D' = 1 degenerates to the single interval [0,1).
class IntervalLadder {
 public:
  explicit IntervalLadder(uint64_t max_degree);

  // Number of intervals, log2(D') + 1.
  uint32_t interval_count() const { return levels_ + 1; }
  // s_i as a 2^64-scaled fixed point; s_0 = 0.
  uint64_t lower(uint32_t i) const;
  // |I_i| scaled by 2^64; 0 encodes the full range 2^64 (only when D' = 1).
  uint64_t width(uint32_t i) const;
  // |I_i| / (1 - s_i): probability that a rank lands in I_i given it is not
  // below s_i. Exactly 1 at the last interval.
  double select_prob(uint32_t i) const;
  uint32_t interval_of(uint64_t r) const;

  uint64_t rounded_degree_bound() const { return uint64_t{1} << levels_; }

 private:
  uint32_t levels_;  // log2(D')
};

// Exact Binomial(n, p) draw by inverse transform walked outward from the
// mode, with the pmf evaluated once in log space and extended by recurrence.
uint64_t binomial_sample(uint64_t n, double p, SplitMix64& rng);

struct NeighborByRank {
  uint64_t vertex;
  uint64_t edge_key;
  RankValue rank;
};

// Supplies i.i.d. uniform edge ranks. lowest(v, i) is the iteration
// primitive the oracles drive: the i-th lowest-rank neighbor of v, or empty
// past the degree.
class RankSource {
 public:
  virtual ~RankSource() = default;
  virtual std::optional<NeighborByRank> lowest(uint64_t v, uint64_t i) = 0;
  // Explicit mode: always available. Lazy mode: the rank must already be
  // revealed; oracles never need one that is not.
  virtual RankValue rank_of(uint64_t edge_key) = 0;
};

// All m ranks drawn up front. Reference and testing mode; O(1) rank_of,
// per-vertex rank-sorted adjacency built on first touch.
class ExplicitRankSource final : public RankSource {
 public:
  ExplicitRankSource(const Graph& g, uint64_t seed);
  // Replay / permutation mode: ranks[e] for edge id e. Positions of a
  // permutation are valid ranks.
  ExplicitRankSource(const Graph& g, std::vector<uint64_t> ranks);

  std::optional<NeighborByRank> lowest(uint64_t v, uint64_t i) override;
  RankValue rank_of(uint64_t edge_key) override;

  const std::vector<uint64_t>& raw_ranks() const { return ranks_; }

 private:
  const Graph* g_;
  std::vector<uint64_t> ranks_;
  std::vector<std::vector<NeighborByRank>> sorted_;
  std::vector<uint8_t> built_;
};

// Work tallies for the lazy machinery's cost-shape checks.
struct LazySourceStats {
  uint64_t expose_calls = 0;      // intervals opened
  uint64_t sampled_indices = 0;   // neighbor queries issued by expose_next
  uint64_t ranks_revealed = 0;
  uint64_t lowest_calls = 0;
  uint64_t condition_evals = 0;   // frontier checks inside lowest
};

// Lazy rank exposure over any adjacency view: ranks are revealed
// interval-by-interval only where the oracles look, at i.i.d.-uniform cost
// proportional to what is revealed. No per-vertex storage until first touch.
class LazyRankSource final : public RankSource {
 public:
  LazyRankSource(AdjacencyView& view, uint64_t seed);

  // Forget all revealed ranks and start over with a new seed. Containers keep
  // their capacity, so a reset source is cheap to reuse across samples.
  void reset(uint64_t seed);

  std::optional<NeighborByRank> lowest(uint64_t v, uint64_t i) override;
  RankValue rank_of(uint64_t edge_key) override;

  // Opens the next interval of v: draws the subsample S(v, k(v)) of
  // adjacency positions, queries each sampled neighbor, and reveals new
  // ranks in I_{k(v)} where consistent. pre: k(v) <= last interval index.
  void expose_next(uint64_t v);

  // Reveal every rank (test harnesses; small views only).
  void expose_all();

  // Introspection.
  uint32_t exposure_level(uint64_t v) const;
  bool is_revealed(uint64_t edge_key) const { return revealed_.count(edge_key) != 0; }
  std::optional<RankValue> revealed_rank(uint64_t edge_key) const;
  uint64_t touched_vertex_count() const { return state_.size(); }
  const IntervalLadder& ladder() const { return ladder_; }
  const LazySourceStats& work_stats() const { return work_; }

 private:
  struct VertexState {
    uint32_t k = 0;                 // next interval to open
    uint64_t deg = UINT64_MAX;      // cached degree query; UINT64_MAX = unknown
    uint64_t below_frontier = 0;    // exposed neighbors with rank < s_k
    std::vector<uint32_t> interval_counts;
    std::vector<NeighborByRank> by_rank;  // exposed neighbors, rank-sorted
  };

  uint64_t cached_degree(uint64_t v, VertexState& st);
  void add_exposed(uint64_t v, NeighborByRank entry);
  VertexState& state_of(uint64_t v);

  AdjacencyView* view_;
  IntervalLadder ladder_;
  SplitMix64 rng_;
  std::unordered_map<uint64_t, uint64_t> revealed_;  // edge key -> raw rank
  std::unordered_map<uint64_t, VertexState> state_;
  std::vector<uint64_t> scratch_indices_;
  std::unordered_set<uint64_t> scratch_set_;
  LazySourceStats work_;
};

}  // namespace submatch
