#include "submatch/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "submatch/corpus.hpp"
#include "submatch/oracle.hpp"
#include "submatch/rank_source.hpp"
#include "submatch/reference.hpp"
#include "submatch/rng.hpp"

namespace submatch {

namespace {

bool expired(const Deadline& d) {
  return d && std::chrono::steady_clock::now() > *d;
}

std::string graph_label(const Graph& g, size_t idx) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " m=" << g.edge_count() << " #" << idx;
  return os.str();
}

std::vector<Graph> oracle_corpus() {
  auto graphs = connected_graph_corpus(5);
  for (auto& g : fixture_graphs(7)) graphs.push_back(std::move(g));
  return graphs;
}

}  // namespace

VerifyOutcome verify_oracle_suite(Deadline deadline) {
  VerifyOutcome out;
  const auto graphs = oracle_corpus();
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    if (expired(deadline)) {
      out.budget_exceeded = true;
      return out;
    }
    const Graph& g = graphs[gi];
    const uint32_t m = g.edge_count();
    const uint32_t n = g.vertex_count();

    uint64_t mismatches = 0;
    uint64_t sessions = 0;
    std::vector<uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<uint64_t> ranks(m);
    do {
      for (uint32_t pos = 0; pos < m; ++pos) ranks[order[pos]] = pos;
      ExplicitRankSource src(g, ranks);
      const Matching global = greedy_matching(g, src);
      OracleSession session(src, n);
      for (uint32_t v = 0; v < n; ++v) {
        ++sessions;
        if (session.vertex_matched(v) != (global.matched[v] != 0)) ++mismatches;
      }
    } while (std::next_permutation(order.begin(), order.end()));

    CheckResult r;
    r.name = "oracle agreement " + graph_label(g, gi);
    r.pass = mismatches == 0;
    r.detail = std::to_string(sessions) + " sessions, " + std::to_string(mismatches) +
               " mismatches";
    out.results.push_back(std::move(r));
  }
  return out;
}

VerifyOutcome verify_rounds_suite(Deadline deadline) {
  VerifyOutcome out;
  uint64_t violations = 0;
  uint64_t sessions = 0;
  uint32_t worst_path = 0, worst_rho = 0;
  for (uint32_t trial = 0; trial < 100; ++trial) {
    if (expired(deadline)) {
      out.budget_exceeded = true;
      return out;
    }
    const uint32_t n = 50 + 50 * (trial % 4);  // 50..200
    const double dbar = (trial % 2 == 0) ? 2.0 : 8.0;
    const Graph g = gen_gnp(n, dbar / n, derive_seed(0x726e6473ull, trial));
    ExplicitRankSource src(g, derive_seed(0x726e6b73ull, trial));
    const RoundProfile prof = parallel_rounds(g, src);
    OracleSession session(src, n);
    for (uint32_t v = 0; v < n; ++v) {
      session.vertex_matched(v);
      ++sessions;
      const auto path = static_cast<uint32_t>(session.report().max_path);
      if (path > 2 * prof.rho + 1) ++violations;
      if (path > worst_path) {
        worst_path = path;
        worst_rho = prof.rho;
      }
    }
  }
  CheckResult r;
  r.name = "query-path length vs parallel rounds (100 random graphs)";
  r.pass = violations == 0;
  std::ostringstream os;
  os << sessions << " sessions, " << violations << " violations, deepest path " << worst_path
     << " with rho " << worst_rho;
  r.detail = os.str();
  out.results.push_back(std::move(r));
  return out;
}

VerifyOutcome verify_vizing_suite(Deadline deadline) {
  VerifyOutcome out;
  auto graphs = oracle_corpus();
  graphs.push_back(petersen_graph());
  graphs.push_back(gen_structured(StructuredKind::perfect_matching, 14));
  graphs.push_back(gen_complete_bipartite(2, 2));
  graphs.push_back(gen_complete_bipartite(3, 5));
  graphs.push_back(gen_complete_bipartite(4, 4));
  graphs.push_back(gen_complete_bipartite(3, 8));

  uint64_t failures = 0;
  std::string first_failure;
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    if (expired(deadline)) {
      out.budget_exceeded = true;
      return out;
    }
    const Graph& g = graphs[gi];
    const Rational floor = vizing_floor(stats(g), g.vertex_count());
    const auto mu = static_cast<int64_t>(exact_maximum_matching(g));
    if (!(floor <= Rational(mu, 1))) {
      ++failures;
      if (first_failure.empty()) first_failure = graph_label(g, gi);
    }
  }
  CheckResult r;
  r.name = "vizing floor mu >= n*dbar/(4*Delta) (full corpus)";
  r.pass = failures == 0;
  r.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(failures) +
             " failures" + (first_failure.empty() ? "" : " (first: " + first_failure + ")");
  out.results.push_back(std::move(r));
  return out;
}

VerifyOutcome verify_lazy_suite(Deadline deadline) {
  VerifyOutcome out;
  const auto graphs = connected_graph_corpus(5);
  constexpr uint64_t kSeeds = 100000;
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    if (expired(deadline)) {
      out.budget_exceeded = true;
      return out;
    }
    const Graph& g = graphs[gi];
    const uint32_t m = g.edge_count();

    // Exact distribution of |GMM| over all m! permutations.
    std::vector<double> exact(m + 1, 0.0);
    const auto records = enumerate_permutation_behavior(g);
    for (const auto& rec : records)
      exact[static_cast<uint32_t>(std::popcount(rec.matching_mask))] += 1.0;
    for (auto& p : exact) p /= static_cast<double>(records.size());

    std::vector<double> lazy(m + 1, 0.0);
    AccessCounter counter;
    GraphListView view(g, counter);
    LazyRankSource src(view, 0);
    for (uint64_t s = 0; s < kSeeds; ++s) {
      src.reset(derive_seed(0x6c7a6463ull + gi, s));
      src.expose_all();
      lazy[greedy_matching(g, src).size()] += 1.0;
    }
    for (auto& p : lazy) p /= static_cast<double>(kSeeds);

    double tv = 0.0;
    for (uint32_t i = 0; i <= m; ++i) tv += std::abs(exact[i] - lazy[i]);
    tv /= 2.0;

    CheckResult r;
    r.name = "lazy-mode |GMM| distribution " + graph_label(g, gi);
    r.pass = tv < 0.02;
    std::ostringstream os;
    os << "TV distance " << tv << " over " << kSeeds << " seeds";
    r.detail = os.str();
    out.results.push_back(std::move(r));
  }
  return out;
}

VerifyOutcome verify_suite(const std::string& name, Deadline deadline) {
  if (name == "oracle") return verify_oracle_suite(deadline);
  if (name == "rounds") return verify_rounds_suite(deadline);
  if (name == "vizing") return verify_vizing_suite(deadline);
  if (name == "lazy") return verify_lazy_suite(deadline);
  if (name == "all") {
    VerifyOutcome out;
    for (const char* suite : {"oracle", "rounds", "vizing", "lazy"}) {
      VerifyOutcome part = verify_suite(suite, deadline);
      for (auto& r : part.results) out.results.push_back(std::move(r));
      if (part.budget_exceeded) {
        out.budget_exceeded = true;
        break;
      }
    }
    return out;
  }
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace submatch
