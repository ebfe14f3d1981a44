#include "submatch/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace submatch {

OracleSession::OracleSession(RankSource& ranks, uint64_t vertex_count, AccessCounter* counter)
    : ranks_(&ranks), n_(vertex_count), counter_(counter) {}

void OracleSession::begin_session(uint64_t root_vertex) {
  report_ = SessionReport{};
  edge_data_.clear();
  stack_.clear();
  path_vertices_.clear();
  path_vertices_.insert(root_vertex);
  if (counter_) counter_start_ = *counter_;
}

void OracleSession::end_session() {
  uint64_t max_q = 0;
  for (const auto& [key, ed] : edge_data_) max_q = std::max(max_q, ed.q);
  report_.max_q = max_q;
  if (n_ > 0 && max_q > 2 * n_ - 1)
    throw std::logic_error("oracle session: per-edge call tally exceeded 2n-1");
  if (counter_) {
    report_.queries.degree_queries = counter_->degree_queries - counter_start_.degree_queries;
    report_.queries.neighbor_queries = counter_->neighbor_queries - counter_start_.neighbor_queries;
    report_.queries.pair_queries = counter_->pair_queries - counter_start_.pair_queries;
  }
}

OracleSession::EdgeData& OracleSession::account(uint64_t edge_key, uint64_t depth) {
  ++report_.t;
  report_.max_path = std::max(report_.max_path, depth);
  auto& ed = edge_data_[edge_key];
  ++ed.q;
  return ed;
}

std::optional<bool> OracleSession::cached(const EdgeData& ed, uint64_t entry, uint64_t stop) const {
  const int side = entry < stop ? 0 : 2;
  if (!(ed.cache & (1u << side))) return std::nullopt;
  return (ed.cache & (2u << side)) != 0;
}

void OracleSession::store(uint64_t edge_key, uint64_t entry, uint64_t stop, bool value) {
  const int side = entry < stop ? 0 : 2;
  auto& ed = edge_data_[edge_key];
  if (ed.cache & (1u << side)) throw std::logic_error("oracle cache entries are write-once");
  ed.cache |= 1u << side;
  if (value) ed.cache |= 2u << side;
}

bool OracleSession::vertex_matched(uint64_t v) { return matched_partner(v).has_value(); }

std::optional<uint64_t> OracleSession::matched_partner(uint64_t v) {
  begin_session(v);
  std::optional<uint64_t> partner;
  RankValue prev{};
  for (uint64_t j = 1;; ++j) {
    const auto nb = ranks_->lowest(v, j);
    if (!nb) break;
    if (j > 1 && !(prev < nb->rank))
      throw std::logic_error("rank source returned a non-increasing neighbor walk");
    prev = nb->rank;
    if (run_edge(nb->edge_key, nb->vertex, v, nb->rank)) {
      partner = nb->vertex;
      break;
    }
  }
  end_session();
  return partner;
}

bool OracleSession::edge_matched(uint64_t edge_key, uint64_t entry, uint64_t stop) {
  begin_session(stop);
  // The root edge's rank is discovered by the walk itself, never queried up
  // front; children compare against the max sentinel vacuously.
  const bool ans = run_edge(edge_key, entry, stop, RankValue{UINT64_MAX, UINT64_MAX});
  end_session();
  return ans;
}

bool OracleSession::run_edge(uint64_t root_key, uint64_t root_entry, uint64_t root_stop,
                             RankValue root_rank) {
  {
    const EdgeData& ed = account(root_key, 1);
    if (const auto c = cached(ed, root_entry, root_stop)) return *c;
  }
  if (!path_vertices_.insert(root_entry).second)
    throw std::logic_error("query path revisited a vertex");
  stack_.push_back(Frame{root_key, root_entry, root_stop, root_rank, 1});

  while (true) {
    Frame& f = stack_.back();
    const auto nb = ranks_->lowest(f.entry, f.j);
    if (!nb) throw std::logic_error("edge oracle walk ran past its target edge");
    ++f.j;

    bool value;
    if (nb->vertex == f.stop) {
      // The walk reached the frame's own edge: nothing lower blocked it.
      if (nb->edge_key != f.edge_key)
        throw std::logic_error("edge oracle walk closed an unexpected edge");
      value = true;
    } else {
      const EdgeData& ed = account(nb->edge_key, stack_.size() + 1);
      if (!(nb->rank < f.rank))
        throw std::logic_error("query path ranks must strictly decrease");
      if (const auto c = cached(ed, nb->vertex, f.entry)) {
        if (path_vertices_.count(nb->vertex))
          throw std::logic_error("query path revisited a vertex");
        if (!*c) continue;  // known non-matching neighbor; keep walking
        value = false;      // a lower-rank neighbor is matched
      } else {
        if (!path_vertices_.insert(nb->vertex).second)
          throw std::logic_error("query path revisited a vertex");
        stack_.push_back(Frame{nb->edge_key, nb->vertex, f.entry, nb->rank, 1});
        continue;
      }
    }

    // Resolve the top frame; a true answer falsifies its parent in the same
    // stroke, a false answer lets the parent resume its walk.
    while (true) {
      const Frame top = stack_.back();
      store(top.edge_key, top.entry, top.stop, value);
      path_vertices_.erase(top.entry);
      stack_.pop_back();
      if (stack_.empty()) return value;
      if (value) {
        value = false;
        continue;
      }
      break;
    }
  }
}

std::vector<std::pair<uint64_t, uint64_t>> OracleSession::per_edge_q() const {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  out.reserve(edge_data_.size());
  for (const auto& [key, ed] : edge_data_) out.emplace_back(key, ed.q);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace submatch
