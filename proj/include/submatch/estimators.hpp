#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "submatch/graph.hpp"
#include "submatch/hview.hpp"
#include "submatch/oracle.hpp"
#include "submatch/rank_source.hpp"

namespace submatch {

// Output of one estimator run: the matching/cover size estimates plus the
// cost incurred producing them.
struct Estimate {
  double mu_tilde = 0.0;
  double nu_tilde = 0.0;
  uint64_t samples = 0;
  double matched_fraction = 0.0;
  AccessCounter cost;
  double elapsed_seconds = 0.0;
  // Oracle diagnostics aggregated over the samples.
  uint64_t oracle_calls_total = 0;
  uint64_t oracle_calls_max = 0;
  uint64_t max_path = 0;
};

struct EstimatorOptions {
  // Replaces the sample-count constant (128*24 multiplicative, 16*24
  // additive). The defaults are implemented verbatim; the override exists so
  // experiments can be explicit about which constant they exercise.
  std::optional<double> constant_override;
};

enum class EstimatorKind { list_multiplicative, list_additive, matrix_additive };

// One resumable estimator run. step() performs the setup pass (degree scan
// for the multiplicative estimator) or one oracle sample; this is the unit
// the race interleaves.
class EstimatorInstance {
 public:
  EstimatorInstance(EstimatorKind kind, const Graph& g, double eps, uint64_t seed,
                    EstimatorOptions opts = {});
  ~EstimatorInstance();

  EstimatorInstance(const EstimatorInstance&) = delete;
  EstimatorInstance& operator=(const EstimatorInstance&) = delete;

  bool done() const;
  void step();
  uint64_t cost() const;
  uint64_t sample_target() const;  // k; valid after the setup step
  Estimate finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Adjacency-list model, multiplicative (2+eps)-approximation: O(n) degree
// preprocessing discards singletons, then k = 128*24*(Delta ln n)/(eps^2
// dbar) oracle samples. pre: 0 < eps <= 1.
Estimate estimate_list_multiplicative(const Graph& g, double eps, uint64_t seed,
                                      EstimatorOptions opts = {});

// Adjacency-list model, (2, eps*n)-approximation: k = 16*24*ln n/eps^2
// samples, no preprocessing pass. pre: 0 < eps <= 1.
Estimate estimate_list_additive(const Graph& g, double eps, uint64_t seed,
                                EstimatorOptions opts = {});

// Adjacency-matrix model, (2, eps*n)-approximation through the virtual graph
// H. pre: 1/n <= eps <= 1.
Estimate estimate_matrix_additive(const Graph& g, double eps, uint64_t seed,
                                  EstimatorOptions opts = {});

// Runs `count` independent instances (seeds derived from master_seed) by
// deterministic round-robin interleaving of query budget quanta and returns
// the first to complete. Same seeds and quantum give the same winner.
Estimate race_instances(
    const std::function<std::unique_ptr<EstimatorInstance>(uint64_t seed)>& factory,
    uint64_t count, uint64_t master_seed, uint64_t quantum = 4096);

}  // namespace submatch
