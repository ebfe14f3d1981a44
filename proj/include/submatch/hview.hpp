#pragma once

#include <cstdint>

#include "submatch/graph.hpp"

namespace submatch {

// Virtual graph H over V1 + V2 + U_1 + ... + U_n with absorber blocks of size
// s = ceil(10n/eps). Never materialized; every adjacency-list query about H
// is answered with at most one adjacency-matrix probe to G. Degrees are a
// function of the id alone and cost nothing.
//
// Id layout: V1 = [0, n), V2 = [n, 2n), U_v = [2n + v*s, 2n + (v+1)*s).
class HView final : public AdjacencyView {
 public:
  HView(const Graph& g, double eps, AccessCounter& counter);

  uint64_t vertex_count() const override { return 2 * n_ + n_ * s_; }
  uint64_t degree(uint64_t x) override;
  NeighborRef neighbor(uint64_t x, uint64_t i) override;
  uint64_t max_degree_bound() const override { return n_ + s_; }

  uint64_t base_n() const { return n_; }
  uint64_t block_size() const { return s_; }

  uint64_t v1_id(uint64_t v) const { return v; }
  uint64_t v2_id(uint64_t v) const { return n_ + v; }
  uint64_t u_id(uint64_t v, uint64_t j) const { return 2 * n_ + v * s_ + j; }  // j in [0, s)

  static uint64_t pack_edge(uint64_t a, uint64_t b) {
    if (a > b) std::swap(a, b);
    return (a << 32) | b;
  }

 private:
  const Graph* g_;
  AccessCounter* counter_;
  uint64_t n_;
  uint64_t s_;
};

// Runs the vertex oracle on H from v in V1 under a fresh lazy rank source;
// true iff v's matched partner also lies in V1.
bool v1_matched_within_v1(HView& h, uint64_t v, uint64_t seed);

}  // namespace submatch
