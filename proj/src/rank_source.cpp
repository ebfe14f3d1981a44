#include "submatch/rank_source.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace submatch {

IntervalLadder::IntervalLadder(uint64_t max_degree) {
  if (max_degree == 0) max_degree = 1;
  levels_ = 0;
  while ((uint64_t{1} << levels_) < max_degree) {
    ++levels_;
    if (levels_ >= 63) throw std::invalid_argument("IntervalLadder: degree bound too large");
  }
}

uint64_t IntervalLadder::lower(uint32_t i) const {
  if (i > levels_) throw std::out_of_range("IntervalLadder::lower");
  if (i == 0) return 0;
  // s_i = 2^{i-1} / D' as a fraction of 2^64
  return uint64_t{1} << (63 - (levels_ - i));
}

uint64_t IntervalLadder::width(uint32_t i) const {
  if (i > levels_) throw std::out_of_range("IntervalLadder::width");
  if (i < levels_) return lower(i + 1) - lower(i);
  return 0 - lower(levels_);  // wraps: 2^64 - s_L; 0 encodes the full range
}

double IntervalLadder::select_prob(uint32_t i) const {
  if (i == levels_) return 1.0;
  // Powers of two, so the double ratio is exact.
  return static_cast<double>(width(i)) / (0x1.0p64 - static_cast<double>(lower(i)));
}

uint32_t IntervalLadder::interval_of(uint64_t r) const {
  if (levels_ == 0) return 0;
  const uint64_t scaled = r >> (64 - levels_);  // floor(r * D')
  if (scaled == 0) return 0;
  return static_cast<uint32_t>(std::bit_width(scaled));
}

uint64_t binomial_sample(uint64_t n, double p, SplitMix64& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial_sample: p must be in [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;

  const double logp = std::log(p);
  const double logq = std::log1p(-p);
  uint64_t mode = static_cast<uint64_t>((static_cast<double>(n) + 1.0) * p);
  if (mode > n) mode = n;

  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(mode);
  const double lpmf_mode = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                           std::lgamma(nd - md + 1.0) + md * logp + (nd - md) * logq;

  double acc = rng.next_real();
  double plo = std::exp(lpmf_mode);
  double phi = plo;
  uint64_t lo = mode, hi = mode;
  acc -= plo;
  if (acc < 0.0) return mode;

  const double odds = p / (1.0 - p);
  while (true) {
    const bool can_lo = lo > 0;
    const bool can_hi = hi < n;
    // Both tails exhausted only through floating-point residue; the leftover
    // mass is ~1e-12 of a draw.
    if (!can_lo && !can_hi) return mode;
    const double next_lo =
        can_lo ? plo * (static_cast<double>(lo) / static_cast<double>(n - lo + 1)) / odds : -1.0;
    const double next_hi =
        can_hi ? phi * (static_cast<double>(n - hi) / static_cast<double>(hi + 1)) * odds : -1.0;
    if (next_lo >= next_hi) {
      --lo;
      plo = next_lo;
      acc -= plo;
      if (acc < 0.0) return lo;
    } else {
      ++hi;
      phi = next_hi;
      acc -= phi;
      if (acc < 0.0) return hi;
    }
  }
}

// ---- explicit mode ----

ExplicitRankSource::ExplicitRankSource(const Graph& g, uint64_t seed) : g_(&g) {
  SplitMix64 rng(derive_seed(seed, 0x72616e6bull));
  ranks_.resize(g.edge_count());
  for (auto& r : ranks_) r = rng.next();
  sorted_.resize(g.vertex_count());
  built_.assign(g.vertex_count(), 0);
}

ExplicitRankSource::ExplicitRankSource(const Graph& g, std::vector<uint64_t> ranks)
    : g_(&g), ranks_(std::move(ranks)) {
  if (ranks_.size() != g.edge_count())
    throw std::invalid_argument("ExplicitRankSource: rank vector size must equal edge count");
  sorted_.resize(g.vertex_count());
  built_.assign(g.vertex_count(), 0);
}

std::optional<NeighborByRank> ExplicitRankSource::lowest(uint64_t v, uint64_t i) {
  if (i == 0) throw std::invalid_argument("lowest: positions are 1-based");
  const auto vv = static_cast<uint32_t>(v);
  if (vv >= g_->vertex_count()) throw std::out_of_range("lowest: vertex out of range");
  const uint32_t d = g_->degree(vv);
  if (i > d) return std::nullopt;
  if (!built_[vv]) {
    auto& list = sorted_[vv];
    list.reserve(d);
    for (uint32_t idx = 0; idx < d; ++idx) {
      auto [nbr, eid] = g_->neighbor_entry(vv, idx);
      list.push_back({nbr, eid, RankValue{ranks_[eid], eid}});
    }
    std::sort(list.begin(), list.end(),
              [](const NeighborByRank& a, const NeighborByRank& b) { return a.rank < b.rank; });
    built_[vv] = 1;
  }
  return sorted_[vv][i - 1];
}

RankValue ExplicitRankSource::rank_of(uint64_t edge_key) {
  if (edge_key >= ranks_.size()) throw std::out_of_range("rank_of: edge id out of range");
  return RankValue{ranks_[edge_key], edge_key};
}

// ---- lazy mode ----

LazyRankSource::LazyRankSource(AdjacencyView& view, uint64_t seed)
    : view_(&view), ladder_(view.max_degree_bound()), rng_(derive_seed(seed, 0x6c617a79ull)) {}

void LazyRankSource::reset(uint64_t seed) {
  rng_ = SplitMix64(derive_seed(seed, 0x6c617a79ull));
  revealed_.clear();
  state_.clear();
  work_ = {};
}

LazyRankSource::VertexState& LazyRankSource::state_of(uint64_t v) {
  auto& st = state_[v];
  if (st.interval_counts.empty()) st.interval_counts.assign(ladder_.interval_count(), 0);
  return st;
}

uint64_t LazyRankSource::cached_degree(uint64_t v, VertexState& st) {
  if (st.deg == UINT64_MAX) st.deg = view_->degree(v);
  return st.deg;
}

void LazyRankSource::add_exposed(uint64_t v, NeighborByRank entry) {
  auto& st = state_of(v);
  const uint32_t iv = ladder_.interval_of(entry.rank.r);
  // A reveal can never land below the receiving endpoint's frontier: its own
  // exposures and its neighbors' draws both live in intervals >= k(v).
  if (iv < st.k) throw std::logic_error("lazy exposure invariant violated");
  auto it = std::upper_bound(
      st.by_rank.begin(), st.by_rank.end(), entry,
      [](const NeighborByRank& a, const NeighborByRank& b) { return a.rank < b.rank; });
  st.by_rank.insert(it, entry);
  ++st.interval_counts[iv];
}

void LazyRankSource::expose_next(uint64_t v) {
  {
    auto& st = state_of(v);
    if (st.k >= ladder_.interval_count())
      throw std::logic_error("expose_next: past the last interval");
  }
  const uint32_t k = state_.at(v).k;
  const uint64_t d = cached_degree(v, state_.at(v));
  ++work_.expose_calls;

  const double p = ladder_.select_prob(k);
  const uint64_t sz = binomial_sample(d, p, rng_);

  // S(v, k): a uniform sz-subset of the adjacency positions [1..d], via
  // Floyd's algorithm; processed in draw order.
  scratch_indices_.clear();
  scratch_set_.clear();
  for (uint64_t t = d - sz; t < d; ++t) {
    const uint64_t j = 1 + rng_.next_below(t + 1);
    if (scratch_set_.insert(j).second) {
      scratch_indices_.push_back(j);
    } else {
      scratch_set_.insert(t + 1);
      scratch_indices_.push_back(t + 1);
    }
  }

  for (const uint64_t idx : scratch_indices_) {
    ++work_.sampled_indices;
    const NeighborRef nb = view_->neighbor(v, idx);
    if (revealed_.count(nb.edge_key)) continue;  // already drawn, nothing new
    const auto itu = state_.find(nb.vertex);
    const uint32_t ku = (itu == state_.end()) ? 0 : itu->second.k;
    // k(u) > k(v): u has exposed I_k already, so this edge's rank cannot be
    // in I_k; the sampled index reveals nothing.
    if (ku >= k + 1) continue;
    const uint64_t w = ladder_.width(k);
    const uint64_t r = ladder_.lower(k) + (w == 0 ? rng_.next() : rng_.next_below(w));
    revealed_.emplace(nb.edge_key, r);
    ++work_.ranks_revealed;
    const RankValue rv{r, nb.edge_key};
    add_exposed(v, {nb.vertex, nb.edge_key, rv});
    add_exposed(nb.vertex, {v, nb.edge_key, rv});
  }

  auto& st = state_of(v);  // re-fetch: add_exposed may have rehashed
  st.k = k + 1;
  st.below_frontier += st.interval_counts[k];
}

std::optional<NeighborByRank> LazyRankSource::lowest(uint64_t v, uint64_t i) {
  if (i == 0) throw std::invalid_argument("lowest: positions are 1-based");
  ++work_.lowest_calls;
  const uint64_t d = cached_degree(v, state_of(v));
  if (i > d) return std::nullopt;
  while (true) {
    ++work_.condition_evals;
    if (state_.at(v).below_frontier >= i) break;
    expose_next(v);
  }
  // Every edge of v below the frontier is revealed, so the sorted prefix is
  // the true rank order.
  return state_.at(v).by_rank[i - 1];
}

RankValue LazyRankSource::rank_of(uint64_t edge_key) {
  const auto it = revealed_.find(edge_key);
  if (it == revealed_.end())
    throw std::logic_error("rank_of: rank not revealed in lazy mode");
  return RankValue{it->second, edge_key};
}

void LazyRankSource::expose_all() {
  const uint64_t n = view_->vertex_count();
  for (uint64_t v = 0; v < n; ++v)
    while (exposure_level(v) < ladder_.interval_count()) expose_next(v);
}

uint32_t LazyRankSource::exposure_level(uint64_t v) const {
  const auto it = state_.find(v);
  return it == state_.end() ? 0 : it->second.k;
}

std::optional<RankValue> LazyRankSource::revealed_rank(uint64_t edge_key) const {
  const auto it = revealed_.find(edge_key);
  if (it == revealed_.end()) return std::nullopt;
  return RankValue{it->second, edge_key};
}

}  // namespace submatch
