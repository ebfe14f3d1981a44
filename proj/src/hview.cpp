#include "submatch/hview.hpp"

#include <cmath>
#include <stdexcept>

#include "submatch/oracle.hpp"
#include "submatch/rank_source.hpp"

namespace submatch {

HView::HView(const Graph& g, double eps, AccessCounter& counter)
    : g_(&g), counter_(&counter), n_(g.vertex_count()) {
  if (n_ == 0) throw std::invalid_argument("HView: base graph must have vertices");
  if (!(eps <= 1.0) || eps < 1.0 / static_cast<double>(n_))
    throw std::invalid_argument("HView: eps must satisfy 1/n <= eps <= 1");
  s_ = static_cast<uint64_t>(std::ceil(10.0 * static_cast<double>(n_) / eps));
  if (vertex_count() > (uint64_t{1} << 32))
    throw BudgetError("HView: 2n + n*s exceeds the 32-bit id space");
}

uint64_t HView::degree(uint64_t x) {
  if (x >= vertex_count()) throw std::out_of_range("HView::degree: id out of range");
  if (x < n_) return n_;            // V1
  if (x < 2 * n_) return n_ + s_;   // V2
  return 1;                         // absorber
}

NeighborRef HView::neighbor(uint64_t x, uint64_t i) {
  if (x >= vertex_count()) throw std::out_of_range("HView::neighbor: id out of range");
  if (i < 1 || i > degree(x)) throw std::out_of_range("HView::neighbor: index out of range");

  if (x < n_) {
    // v1: position i wires to vertex i-1, on the V1 side iff (v, i-1) in E.
    // The self position probes pair(v, v) = false and lands in V2.
    const auto v = static_cast<uint32_t>(x);
    const auto w = static_cast<uint32_t>(i - 1);
    const uint64_t other = pair_query(*g_, v, w, *counter_) ? v1_id(w) : v2_id(w);
    return {other, pack_edge(x, other)};
  }
  if (x < 2 * n_) {
    const uint64_t v = x - n_;
    if (i <= n_) {
      const auto w = static_cast<uint32_t>(i - 1);
      const uint64_t other =
          pair_query(*g_, static_cast<uint32_t>(v), w, *counter_) ? v2_id(w) : v1_id(w);
      return {other, pack_edge(x, other)};
    }
    // The last s positions are v2's absorber block; no probe.
    const uint64_t other = u_id(v, i - n_ - 1);
    return {other, pack_edge(x, other)};
  }
  const uint64_t v = (x - 2 * n_) / s_;
  const uint64_t other = v2_id(v);
  return {other, pack_edge(x, other)};
}

bool v1_matched_within_v1(HView& h, uint64_t v, uint64_t seed) {
  if (v >= h.base_n()) throw std::invalid_argument("v1_matched_within_v1: v must be a V1 vertex");
  LazyRankSource src(h, seed);
  OracleSession session(src, h.vertex_count());
  const auto partner = session.matched_partner(v);
  return partner && *partner < h.base_n();
}

}  // namespace submatch
