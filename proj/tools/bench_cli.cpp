// submatch-bench: graph generation, sublinear matching/vertex-cover
// estimators, exact baselines, and the query-complexity experiments.
// CSV on stdout, diagnostics on stderr.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "submatch/corpus.hpp"
#include "submatch/estimators.hpp"
#include "submatch/graph.hpp"
#include "submatch/oracle.hpp"
#include "submatch/rank_source.hpp"
#include "submatch/reference.hpp"
#include "submatch/rng.hpp"
#include "submatch/verify.hpp"

namespace {

using namespace submatch;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// --gen mini-language: pm:N path:N cycle:N star:N gnp:N:P kab:A:B
Graph graph_from_spec(const std::string& spec, uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty --gen spec");
  const std::string& kind = parts[0];
  auto want = [&](size_t k) {
    if (parts.size() != k + 1)
      throw std::invalid_argument("--gen " + kind + " takes " + std::to_string(k) + " argument(s)");
  };
  if (kind == "pm" || kind == "path" || kind == "cycle" || kind == "star") {
    want(1);
    return gen_structured(structured_kind_from_name(kind),
                          static_cast<uint32_t>(std::stoul(parts[1])));
  }
  if (kind == "gnp") {
    want(2);
    return gen_gnp(static_cast<uint32_t>(std::stoul(parts[1])), std::stod(parts[2]),
                   derive_seed(seed, 0x67656eull));
  }
  if (kind == "kab") {
    want(2);
    return gen_complete_bipartite(static_cast<uint32_t>(std::stoul(parts[1])),
                                  static_cast<uint32_t>(std::stoul(parts[2])));
  }
  throw std::invalid_argument("unknown --gen kind: " + kind);
}

uint64_t worker_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SUBLINEAR_MATCH_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

int run_estimate(const std::string& model, const std::string& mode, double eps, uint64_t seed,
                 const std::string& graph_path, const std::string& gen_spec, uint64_t race) {
  if (model == "matrix" && mode == "mult") {
    std::cerr << "error: no multiplicative matrix estimator exists (every multiplicative"
                 " approximation needs Omega(n^2) matrix probes)\n";
    return 2;
  }
  EstimatorKind kind;
  if (model == "list" && mode == "mult") kind = EstimatorKind::list_multiplicative;
  else if (model == "list" && mode == "additive") kind = EstimatorKind::list_additive;
  else if (model == "matrix" && mode == "additive") kind = EstimatorKind::matrix_additive;
  else {
    std::cerr << "error: unsupported model/mode combination\n";
    return 2;
  }

  const Graph g = graph_path.empty() ? graph_from_spec(gen_spec, seed)
                                     : load_edge_list_file(graph_path);
  const std::string desc = graph_path.empty() ? gen_spec : graph_path;

  const auto t0 = std::chrono::steady_clock::now();
  const Estimate est = race_instances(
      [&](uint64_t s) { return std::make_unique<EstimatorInstance>(kind, g, eps, s); }, race,
      seed);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::string mu_exact, nu_exact;
  if (g.vertex_count() <= 24) {
    mu_exact = std::to_string(exact_maximum_matching(g));
    nu_exact = std::to_string(exact_min_vertex_cover(g));
  }

  const GraphStats st = stats(g);
  std::cout << "command,graph,n,m,dbar,max_degree,model,mode,eps,seed,race,k,f,mu_est,nu_est,"
               "mu_exact,nu_exact,degree_queries,neighbor_queries,pair_queries,total_queries,"
               "mean_t,max_t,max_path\n";
  const double mean_t = est.samples == 0 ? 0.0
                                         : static_cast<double>(est.oracle_calls_total) /
                                               static_cast<double>(est.samples);
  std::cout << "estimate," << desc << ',' << g.vertex_count() << ',' << g.edge_count() << ','
            << fmt(st.avg_degree.to_double()) << ',' << st.max_degree << ',' << model << ','
            << mode << ',' << fmt(eps) << ',' << seed << ',' << race << ',' << est.samples << ','
            << fmt(est.matched_fraction) << ',' << fmt(est.mu_tilde) << ',' << fmt(est.nu_tilde)
            << ',' << mu_exact << ',' << nu_exact << ',' << est.cost.degree_queries << ','
            << est.cost.neighbor_queries << ',' << est.cost.pair_queries << ','
            << est.cost.total() << ',' << fmt(mean_t) << ',' << est.oracle_calls_max << ','
            << est.max_path << '\n';
  std::cerr << "estimate: " << est.samples << " samples in " << fmt(wall) << " s\n";
  return 0;
}

struct TrialStats {
  uint64_t t = 0;
  uint64_t max_path = 0;
};

int run_bench_queries(uint32_t n, const std::vector<double>& dbars, uint64_t trials,
                      uint64_t seed, const std::string& gen_spec) {
  std::cout << "command,graph,n,m,dbar_target,dbar,max_degree,trials,seed,mean_t,p50_t,p99_t,"
               "max_t,max_path,t_over_dbar_ln_n\n";

  struct Job {
    std::string desc;
    Graph graph;
    double dbar_target;
  };
  std::vector<Job> jobs;
  if (!gen_spec.empty()) {
    Graph g = graph_from_spec(gen_spec, seed);
    const double target = stats(g).avg_degree.to_double();
    jobs.push_back({gen_spec, std::move(g), target});
  } else {
    for (size_t i = 0; i < dbars.size(); ++i) {
      const double d = dbars[i];
      std::ostringstream os;
      os << "gnp:" << n << ":" << fmt(d / n);
      jobs.push_back({os.str(), gen_gnp(n, d / n, derive_seed(seed, 1000 + i)), d});
    }
  }

  for (const auto& job : jobs) {
    const Graph& g = job.graph;
    const uint32_t nn = g.vertex_count();
    std::vector<TrialStats> per_trial(trials);

    const uint64_t workers = std::min<uint64_t>(worker_cap(), std::max<uint64_t>(1, trials));
    auto run_range = [&](uint64_t lo, uint64_t hi) {
      AccessCounter counter;
      GraphListView view(g, counter);
      LazyRankSource src(view, 0);
      OracleSession session(src, nn, &counter);
      for (uint64_t t = lo; t < hi; ++t) {
        const uint64_t ts = derive_seed(seed, t);
        const uint64_t v = SplitMix64(derive_seed(ts, 1)).next_below(nn);
        src.reset(derive_seed(ts, 2));
        session.vertex_matched(v);
        per_trial[t] = {session.report().t, session.report().max_path};
      }
    };
    if (workers <= 1) {
      run_range(0, trials);
    } else {
      std::vector<std::thread> pool;
      const uint64_t chunk = (trials + workers - 1) / workers;
      for (uint64_t w = 0; w < workers; ++w) {
        const uint64_t lo = w * chunk;
        const uint64_t hi = std::min<uint64_t>(trials, lo + chunk);
        if (lo < hi) pool.emplace_back(run_range, lo, hi);
      }
      for (auto& th : pool) th.join();
    }

    std::vector<uint64_t> ts(trials);
    uint64_t t_sum = 0, path_max = 0;
    for (uint64_t t = 0; t < trials; ++t) {
      ts[t] = per_trial[t].t;
      t_sum += per_trial[t].t;
      path_max = std::max(path_max, per_trial[t].max_path);
    }
    std::sort(ts.begin(), ts.end());
    const uint64_t p50 = trials ? ts[trials / 2] : 0;
    const uint64_t p99 = trials ? ts[(trials * 99) / 100] : 0;
    const uint64_t tmax = trials ? ts.back() : 0;
    const double mean_t = trials ? static_cast<double>(t_sum) / static_cast<double>(trials) : 0.0;

    const GraphStats st = stats(g);
    const double dbar = st.avg_degree.to_double();
    const double norm = dbar > 0.0 ? mean_t / (dbar * std::log(static_cast<double>(nn))) : 0.0;
    std::cout << "bench_queries," << job.desc << ',' << nn << ',' << g.edge_count() << ','
              << fmt(job.dbar_target) << ',' << fmt(dbar) << ',' << st.max_degree << ','
              << trials << ',' << seed << ',' << fmt(mean_t) << ',' << p50 << ',' << p99 << ','
              << tmax << ',' << path_max << ',' << (dbar > 0.0 ? fmt(norm) : "") << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite, double budget_seconds) {
  Deadline deadline;
  if (budget_seconds > 0.0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(budget_seconds));
  const VerifyOutcome outcome = verify_suite(suite, deadline);
  for (const auto& r : outcome.results)
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
              << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
  if (outcome.budget_exceeded) {
    std::cerr << "verify: budget exceeded after " << outcome.results.size()
              << " completed checks\n";
    return 3;
  }
  return outcome.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sublinear matching / vertex cover estimation benchmark"};
  app.require_subcommand(1);

  // estimate
  auto* est = app.add_subcommand("estimate", "run one estimator, print one CSV row");
  std::string model, mode, graph_path, gen_spec;
  double eps = 0.0;
  uint64_t seed = 0, race = 1;
  est->add_option("--model", model, "query model")->required()->check(CLI::IsMember({"list", "matrix"}));
  est->add_option("--mode", mode, "approximation mode")->required()->check(CLI::IsMember({"mult", "additive"}));
  est->add_option("--eps", eps, "epsilon")->required();
  est->add_option("--seed", seed, "master seed")->required();
  auto* g_opt = est->add_option("--graph", graph_path, "edge-list file");
  auto* s_opt = est->add_option("--gen", gen_spec, "generator spec (pm:N path:N cycle:N star:N gnp:N:P kab:A:B)");
  g_opt->excludes(s_opt);
  est->add_option("--race", race, "race this many independent instances")->check(CLI::PositiveNumber);

  // bench-queries
  auto* bq = app.add_subcommand("bench-queries", "average query complexity experiment");
  uint32_t bq_n = 0;
  std::vector<double> bq_dbars;
  uint64_t bq_trials = 0, bq_seed = 0;
  std::string bq_gen;
  bq->add_option("--n", bq_n, "vertex count for G(n, dbar/n)");
  bq->add_option("--dbar", bq_dbars, "average degrees to test")->delimiter(',');
  bq->add_option("--trials", bq_trials, "oracle sessions per graph")->required();
  bq->add_option("--seed", bq_seed, "master seed")->required();
  bq->add_option("--gen", bq_gen, "run on this graph instead of the gnp family");

  // verify
  auto* vf = app.add_subcommand("verify", "exhaustive small-instance check suites");
  std::string suite = "all";
  double budget = 0.0;
  vf->add_option("--suite", suite, "oracle|rounds|vizing|lazy|all")
      ->check(CLI::IsMember({"oracle", "rounds", "vizing", "lazy", "all"}));
  vf->add_option("--budget", budget, "wall-clock budget in seconds (0 = none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (est->parsed()) {
      if (graph_path.empty() && gen_spec.empty()) {
        std::cerr << "error: one of --graph or --gen is required\n";
        return 2;
      }
      return run_estimate(model, mode, eps, seed, graph_path, gen_spec, race);
    }
    if (bq->parsed()) {
      if (bq_gen.empty() && (bq_n == 0 || bq_dbars.empty())) {
        std::cerr << "error: bench-queries needs --n and --dbar (or --gen)\n";
        return 2;
      }
      return run_bench_queries(bq_n, bq_dbars, bq_trials, bq_seed, bq_gen);
    }
    if (vf->parsed()) return run_verify(suite, budget);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
