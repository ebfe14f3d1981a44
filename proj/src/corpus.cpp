#include "submatch/corpus.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace submatch {

namespace {

// Pair index table for vertex count n: pairs (u, v), u < v, in
// lexicographic order, so an edge set is a bitmask over n(n-1)/2 slots.
struct PairTable {
  uint32_t n;
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint32_t index[8][8];

  explicit PairTable(uint32_t nn) : n(nn) {
    for (uint32_t u = 0; u < n; ++u)
      for (uint32_t v = u + 1; v < n; ++v) {
        index[u][v] = index[v][u] = static_cast<uint32_t>(pairs.size());
        pairs.emplace_back(u, v);
      }
  }
};

bool connected_spanning(const PairTable& pt, uint32_t mask) {
  uint32_t reach = 1;  // vertex 0
  bool grew = true;
  while (grew) {
    grew = false;
    uint32_t scan = mask;
    while (scan) {
      const auto p = static_cast<uint32_t>(std::countr_zero(scan));
      scan &= scan - 1;
      const auto [u, v] = pt.pairs[p];
      const uint32_t bits = (1u << u) | (1u << v);
      if ((reach & bits) && (reach & bits) != bits) {
        reach |= bits;
        grew = true;
      }
    }
  }
  return reach == (1u << pt.n) - 1;
}

uint32_t apply_perm(const PairTable& pt, uint32_t mask, const std::vector<uint32_t>& perm) {
  uint32_t out = 0;
  while (mask) {
    const auto p = static_cast<uint32_t>(std::countr_zero(mask));
    mask &= mask - 1;
    const auto [u, v] = pt.pairs[p];
    out |= 1u << pt.index[perm[u]][perm[v]];
  }
  return out;
}

Graph graph_from_mask(const PairTable& pt, uint32_t mask) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  while (mask) {
    const auto p = static_cast<uint32_t>(std::countr_zero(mask));
    mask &= mask - 1;
    edges.push_back(pt.pairs[p]);
  }
  return Graph::from_edges(pt.n, std::move(edges));
}

// Next bitmask with the same popcount (Gosper).
uint32_t next_combination(uint32_t x) {
  const uint32_t c = x & -x;
  const uint32_t r = x + c;
  return (((x ^ r) >> 2) / c) | r;
}

}  // namespace

std::vector<Graph> connected_graph_corpus(uint32_t max_edges) {
  if (max_edges < 1 || max_edges > 6)
    throw std::invalid_argument("connected_graph_corpus: max_edges must be in [1, 6]");

  std::vector<Graph> out;
  for (uint32_t n = 2; n <= max_edges + 1; ++n) {
    const PairTable pt(n);
    const auto num_pairs = static_cast<uint32_t>(pt.pairs.size());

    std::vector<std::vector<uint32_t>> perms;
    {
      std::vector<uint32_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        perms.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // A mask already seen in some representative's orbit is a duplicate; a
    // fresh one contributes its whole orbit.
    std::unordered_set<uint32_t> seen;
    const uint32_t min_m = n - 1;  // connected needs a spanning tree
    for (uint32_t m = min_m; m <= std::min(max_edges, num_pairs); ++m) {
      uint32_t mask = (1u << m) - 1;
      const uint32_t limit = 1u << num_pairs;
      while (mask < limit) {
        if (!seen.count(mask) && connected_spanning(pt, mask)) {
          for (const auto& perm : perms) seen.insert(apply_perm(pt, mask, perm));
          out.push_back(graph_from_mask(pt, mask));
        }
        const uint32_t nxt = next_combination(mask);
        if (nxt <= mask || nxt >= limit) break;
        mask = nxt;
      }
    }
  }
  return out;
}

std::vector<Graph> fixture_graphs(uint32_t max_edges) {
  if (max_edges < 3) throw std::invalid_argument("fixture_graphs: max_edges must be >= 3");
  std::vector<Graph> out;
  for (uint32_t m = max_edges - 1; m <= max_edges; ++m) {
    out.push_back(gen_structured(StructuredKind::path, m + 1));
    out.push_back(gen_structured(StructuredKind::cycle, m));
    out.push_back(gen_structured(StructuredKind::star, m + 1));
  }
  out.push_back(gen_structured(StructuredKind::cycle, 3));
  return out;
}

Graph petersen_graph() {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, std::move(edges));
}

}  // namespace submatch
