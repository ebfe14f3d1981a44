#include "submatch/reference.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace submatch {

Matching greedy_matching(const Graph& g, RankSource& ranks) {
  const uint32_t m = g.edge_count();
  std::vector<std::pair<RankValue, uint32_t>> order;
  order.reserve(m);
  for (uint32_t e = 0; e < m; ++e) order.emplace_back(ranks.rank_of(e), e);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Matching mm;
  mm.matched.assign(g.vertex_count(), 0);
  for (const auto& [rank, e] : order) {
    const auto [u, v] = g.edge(e);
    if (!mm.matched[u] && !mm.matched[v]) {
      mm.matched[u] = mm.matched[v] = 1;
      mm.edges.push_back(e);
    }
  }
  std::sort(mm.edges.begin(), mm.edges.end());
  return mm;
}

RoundProfile parallel_rounds(const Graph& g, RankSource& ranks) {
  const uint32_t m = g.edge_count();
  const uint32_t n = g.vertex_count();

  std::vector<RankValue> rank(m);
  for (uint32_t e = 0; e < m; ++e) rank[e] = ranks.rank_of(e);

  RoundProfile prof;
  prof.round_of_edge.assign(m, 0);
  prof.matching.matched.assign(n, 0);

  std::vector<uint32_t> live(m);
  std::iota(live.begin(), live.end(), 0);
  constexpr uint32_t kNone = UINT32_MAX;
  std::vector<uint32_t> min_edge(n, kNone);

  uint32_t round = 0;
  while (!live.empty()) {
    ++round;
    for (const uint32_t e : live) {
      const auto [u, v] = g.edge(e);
      if (min_edge[u] == kNone || rank[e] < rank[min_edge[u]]) min_edge[u] = e;
      if (min_edge[v] == kNone || rank[e] < rank[min_edge[v]]) min_edge[v] = e;
    }
    for (const uint32_t e : live) {
      const auto [u, v] = g.edge(e);
      if (min_edge[u] == e && min_edge[v] == e) {
        prof.matching.matched[u] = prof.matching.matched[v] = 1;
        prof.matching.edges.push_back(e);
      }
    }
    std::vector<uint32_t> next;
    next.reserve(live.size());
    for (const uint32_t e : live) {
      const auto [u, v] = g.edge(e);
      if (prof.matching.matched[u] || prof.matching.matched[v]) {
        prof.round_of_edge[e] = round;
      } else {
        next.push_back(e);
      }
    }
    for (const uint32_t e : live) {
      const auto [u, v] = g.edge(e);
      min_edge[u] = min_edge[v] = kNone;
    }
    live = std::move(next);
  }
  prof.rho = round;
  std::sort(prof.matching.edges.begin(), prof.matching.edges.end());
  return prof;
}

namespace {

struct MaskContext {
  std::vector<uint32_t> nbr_mask;
  std::vector<int8_t> memo;
};

int matching_rec(MaskContext& ctx, uint32_t mask) {
  if (mask == 0) return 0;
  int8_t& slot = ctx.memo[mask];
  if (slot >= 0) return slot;
  const auto v = static_cast<uint32_t>(std::countr_zero(mask));
  const uint32_t rest = mask & (mask - 1);  // mask without v
  int best = matching_rec(ctx, rest);
  uint32_t candidates = ctx.nbr_mask[v] & mask;
  while (candidates) {
    const auto u = static_cast<uint32_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    best = std::max(best, 1 + matching_rec(ctx, rest & ~(1u << u)));
  }
  slot = static_cast<int8_t>(best);
  return best;
}

int cover_rec(MaskContext& ctx, uint32_t mask) {
  if (mask == 0) return 0;
  int8_t& slot = ctx.memo[mask];
  if (slot >= 0) return slot;
  // Find an uncovered edge inside mask; if none, nothing to cover.
  uint32_t scan = mask;
  while (scan) {
    const auto v = static_cast<uint32_t>(std::countr_zero(scan));
    scan &= scan - 1;
    const uint32_t cands = ctx.nbr_mask[v] & mask;
    if (cands) {
      const auto u = static_cast<uint32_t>(std::countr_zero(cands));
      const int best = 1 + std::min(cover_rec(ctx, mask & ~(1u << v)),
                                    cover_rec(ctx, mask & ~(1u << u)));
      slot = static_cast<int8_t>(best);
      return best;
    }
  }
  slot = 0;
  return 0;
}

MaskContext make_context(const Graph& g, const char* who) {
  const uint32_t n = g.vertex_count();
  if (n > 24) throw BudgetError(std::string(who) + ": refuses n > 24");
  MaskContext ctx;
  ctx.nbr_mask.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    ctx.nbr_mask[u] |= 1u << v;
    ctx.nbr_mask[v] |= 1u << u;
  }
  ctx.memo.assign(size_t{1} << n, -1);
  return ctx;
}

}  // namespace

uint32_t exact_maximum_matching(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  MaskContext ctx = make_context(g, "exact_maximum_matching");
  const uint32_t full = (1u << g.vertex_count()) - 1;
  return static_cast<uint32_t>(matching_rec(ctx, full));
}

uint32_t exact_min_vertex_cover(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  MaskContext ctx = make_context(g, "exact_min_vertex_cover");
  const uint32_t full = (1u << g.vertex_count()) - 1;
  return static_cast<uint32_t>(cover_rec(ctx, full));
}

std::vector<PermutationRecord> enumerate_permutation_behavior(const Graph& g) {
  const uint32_t m = g.edge_count();
  if (m > 8) throw BudgetError("enumerate_permutation_behavior: refuses m > 8");
  if (g.vertex_count() > 32)
    throw BudgetError("enumerate_permutation_behavior: refuses n > 32");

  std::vector<uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<PermutationRecord> out;

  std::vector<uint64_t> ranks(m);
  std::vector<uint8_t> matched(g.vertex_count());
  do {
    PermutationRecord rec;
    rec.order = order;
    std::fill(matched.begin(), matched.end(), 0);
    for (const uint32_t e : order) {
      const auto [u, v] = g.edge(e);
      if (!matched[u] && !matched[v]) {
        matched[u] = matched[v] = 1;
        rec.matching_mask |= 1u << e;
      }
    }
    for (uint32_t v = 0; v < g.vertex_count(); ++v)
      if (matched[v]) rec.matched_vertices_mask |= 1u << v;

    for (uint32_t pos = 0; pos < m; ++pos) ranks[order[pos]] = pos;
    ExplicitRankSource src(g, ranks);
    rec.rho = parallel_rounds(g, src).rho;
    out.push_back(std::move(rec));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Rational vizing_floor(const GraphStats& s, uint64_t n) {
  if (s.max_degree == 0) return Rational(0, 1);
  // n * dbar / (4 * Delta)
  return Rational(static_cast<int64_t>(n), 1) * s.avg_degree /
         Rational(4 * static_cast<int64_t>(s.max_degree), 1);
}

}  // namespace submatch
