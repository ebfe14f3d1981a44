#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "submatch/graph.hpp"
#include "submatch/rank_source.hpp"

namespace submatch {

// Instrumentation of one top-level oracle invocation.
struct SessionReport {
  uint64_t t = 0;         // edge-oracle invocations, cache hits included
  uint64_t max_path = 0;  // deepest recursion stack observed
  uint64_t max_q = 0;     // largest per-edge call tally
  AccessCounter queries;  // charged during the call, when a counter is attached
};

// Local simulation of greedy maximal matching: decides membership of a vertex
// (or edge) in GMM without running the global algorithm. One session = one
// top-level invocation; the per-(edge, entry endpoint) memo, the call
// tallies, and the recursion path all reset at the next invocation.
//
// The structural invariants are checked on every run: the recursion stack is
// a simple path with strictly decreasing ranks, and no edge is entered more
// than 2n-1 times per session.
class OracleSession {
 public:
  OracleSession(RankSource& ranks, uint64_t vertex_count, AccessCounter* counter = nullptr);

  // True iff v is matched in GMM for the session's ranks.
  bool vertex_matched(uint64_t v);

  // v's matched partner: the far endpoint of the first incident edge, in
  // increasing rank order, whose edge oracle answers true. Empty if v is
  // unmatched.
  std::optional<uint64_t> matched_partner(uint64_t v);

  // Edge oracle entered at `entry`; `stop` is the other endpoint. Runs as its
  // own session.
  bool edge_matched(uint64_t edge_key, uint64_t entry, uint64_t stop);

  const SessionReport& report() const { return report_; }

  // Per-edge call tallies Q(e, v, pi) of the last session.
  std::vector<std::pair<uint64_t, uint64_t>> per_edge_q() const;

 private:
  struct EdgeData {
    uint64_t q = 0;
    uint8_t cache = 0;  // bit 0/2: computed for low/high entry; bit 1/3: value
  };
  struct Frame {
    uint64_t edge_key;
    uint64_t entry;  // endpoint whose incident edges the frame walks
    uint64_t stop;   // other endpoint; reaching it ends the walk
    RankValue rank;
    uint64_t j;      // next 1-based position for lowest(entry, .)
  };

  void begin_session(uint64_t root_vertex);
  void end_session();
  EdgeData& account(uint64_t edge_key, uint64_t depth);
  std::optional<bool> cached(const EdgeData& ed, uint64_t entry, uint64_t stop) const;
  void store(uint64_t edge_key, uint64_t entry, uint64_t stop, bool value);
  bool run_edge(uint64_t edge_key, uint64_t entry, uint64_t stop, RankValue rank);

  RankSource* ranks_;
  uint64_t n_;
  AccessCounter* counter_;
  AccessCounter counter_start_;
  SessionReport report_;
  std::unordered_map<uint64_t, EdgeData> edge_data_;
  std::vector<Frame> stack_;
  std::unordered_set<uint64_t> path_vertices_;
};

}  // namespace submatch
