#include "submatch/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "submatch/rng.hpp"

namespace submatch {

namespace {

constexpr double kMultiplicativeConstant = 128.0 * 24.0;
constexpr double kAdditiveConstant = 16.0 * 24.0;

uint64_t ceil_at_least_one(double x) {
  if (!(x < 1.0e18)) throw std::invalid_argument("sample count overflows the budget");
  const double c = std::ceil(x);
  return c < 1.0 ? 1 : static_cast<uint64_t>(c);
}

}  // namespace

struct EstimatorInstance::Impl {
  EstimatorKind kind;
  const Graph* g;
  double eps;
  uint64_t seed;
  EstimatorOptions opts;

  AccessCounter counter;
  std::optional<GraphListView> list_view;
  std::optional<HView> hview;
  std::optional<LazyRankSource> src;
  std::optional<OracleSession> session;

  bool set_up = false;
  bool degenerate = false;       // nothing to sample; estimates are zero
  std::vector<uint32_t> pool;    // multiplicative: non-singleton vertices
  uint64_t pool_n = 0;           // n in the estimate formulas
  uint64_t k = 0;
  uint64_t i = 0;
  uint64_t x = 0;

  uint64_t t_total = 0;
  uint64_t t_max = 0;
  uint64_t path_max = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void set_up_now() {
    const uint64_t n = g->vertex_count();
    switch (kind) {
      case EstimatorKind::list_multiplicative: {
        // O(n) preprocessing: query every degree, discard singletons, and
        // compute dbar and Delta on the rest.
        uint64_t sum_deg = 0;
        uint64_t max_deg = 0;
        for (uint32_t v = 0; v < n; ++v) {
          const uint32_t d = degree_query(*g, v, counter);
          if (d > 0) pool.push_back(v);
          sum_deg += d;
          max_deg = std::max<uint64_t>(max_deg, d);
        }
        if (pool.empty()) {
          degenerate = true;
          pool_n = 0;
          k = 0;
          break;
        }
        pool_n = pool.size();
        const double dbar = static_cast<double>(sum_deg) / static_cast<double>(pool_n);
        const double c = opts.constant_override.value_or(kMultiplicativeConstant);
        k = ceil_at_least_one(c * static_cast<double>(max_deg) *
                              std::log(static_cast<double>(pool_n)) / (eps * eps * dbar));
        list_view.emplace(*g, counter, max_deg);
        src.emplace(*list_view, 0);
        session.emplace(*src, n, &counter);
        break;
      }
      case EstimatorKind::list_additive: {
        pool_n = n;
        if (n == 0) {
          degenerate = true;
          k = 0;
          break;
        }
        const double c = opts.constant_override.value_or(kAdditiveConstant);
        k = ceil_at_least_one(c * std::log(static_cast<double>(n)) / (eps * eps));
        // No degree scan here, so the interval ladder uses the trivial n-1
        // degree bound.
        list_view.emplace(*g, counter, std::max<uint64_t>(1, n - 1));
        src.emplace(*list_view, 0);
        session.emplace(*src, n, &counter);
        break;
      }
      case EstimatorKind::matrix_additive: {
        pool_n = n;
        if (n == 0) {
          degenerate = true;
          k = 0;
          break;
        }
        const double c = opts.constant_override.value_or(kAdditiveConstant);
        k = ceil_at_least_one(c * std::log(static_cast<double>(n)) / (eps * eps));
        hview.emplace(*g, eps, counter);
        src.emplace(*hview, 0);
        session.emplace(*src, hview->vertex_count(), &counter);
        break;
      }
    }
    set_up = true;
  }

  void sample_once() {
    const uint64_t si = derive_seed(seed, i + 1);
    SplitMix64 pick(derive_seed(si, 1));
    uint64_t v;
    if (kind == EstimatorKind::list_multiplicative) {
      v = pool[pick.next_below(pool.size())];
    } else {
      v = pick.next_below(g->vertex_count());
    }
    src->reset(derive_seed(si, 2));
    const auto partner = session->matched_partner(v);
    bool hit;
    if (kind == EstimatorKind::matrix_additive) {
      hit = partner.has_value() && *partner < g->vertex_count();
    } else {
      hit = partner.has_value();
    }
    x += hit ? 1 : 0;
    const SessionReport& rep = session->report();
    t_total += rep.t;
    t_max = std::max(t_max, rep.t);
    path_max = std::max(path_max, rep.max_path);
    ++i;
  }

  Estimate make_estimate() const {
    Estimate est;
    est.samples = k;
    est.cost = counter;
    est.oracle_calls_total = t_total;
    est.oracle_calls_max = t_max;
    est.max_path = path_max;
    est.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const double f = k == 0 ? 0.0 : static_cast<double>(x) / static_cast<double>(k);
    est.matched_fraction = f;
    const double np = static_cast<double>(pool_n);
    double mu = 0.0, nu = 0.0;
    switch (kind) {
      case EstimatorKind::list_multiplicative:
        mu = (1.0 - eps / 2.0) * f * np / 2.0;
        nu = (1.0 + eps / 2.0) * f * np;
        break;
      case EstimatorKind::list_additive:
        mu = f * np / 2.0 - eps * np / 2.0;
        nu = f * np + eps * np / 4.0;
        break;
      case EstimatorKind::matrix_additive:
        mu = f * np / 2.0 - eps * np / 2.0;
        nu = f * np + eps * np / 2.0;
        break;
    }
    // The raw formulas can leave the feasible range on sparse inputs; the
    // true values never do, so clamping preserves every sandwich bound.
    est.mu_tilde = std::clamp(mu, 0.0, np / 2.0);
    est.nu_tilde = std::clamp(nu, 0.0, np);
    return est;
  }
};

EstimatorInstance::EstimatorInstance(EstimatorKind kind, const Graph& g, double eps,
                                     uint64_t seed, EstimatorOptions opts)
    : impl_(std::make_unique<Impl>()) {
  if (!(eps > 0.0) || !(eps <= 1.0))
    throw std::invalid_argument("estimator: eps must satisfy 0 < eps <= 1");
  if (kind == EstimatorKind::matrix_additive && g.vertex_count() > 0 &&
      eps < 1.0 / static_cast<double>(g.vertex_count()))
    throw std::invalid_argument("estimator: matrix model requires eps >= 1/n");
  impl_->kind = kind;
  impl_->g = &g;
  impl_->eps = eps;
  impl_->seed = seed;
  impl_->opts = opts;
}

EstimatorInstance::~EstimatorInstance() = default;

bool EstimatorInstance::done() const { return impl_->set_up && impl_->i >= impl_->k; }

void EstimatorInstance::step() {
  if (!impl_->set_up) {
    impl_->set_up_now();
    return;
  }
  if (impl_->i < impl_->k) impl_->sample_once();
}

uint64_t EstimatorInstance::cost() const { return impl_->counter.total(); }

uint64_t EstimatorInstance::sample_target() const { return impl_->k; }

Estimate EstimatorInstance::finish() {
  if (!done()) throw std::logic_error("EstimatorInstance::finish before completion");
  return impl_->make_estimate();
}

namespace {

Estimate run_to_completion(EstimatorKind kind, const Graph& g, double eps, uint64_t seed,
                           EstimatorOptions opts) {
  EstimatorInstance inst(kind, g, eps, seed, opts);
  while (!inst.done()) inst.step();
  return inst.finish();
}

}  // namespace

Estimate estimate_list_multiplicative(const Graph& g, double eps, uint64_t seed,
                                      EstimatorOptions opts) {
  return run_to_completion(EstimatorKind::list_multiplicative, g, eps, seed, opts);
}

Estimate estimate_list_additive(const Graph& g, double eps, uint64_t seed,
                                EstimatorOptions opts) {
  return run_to_completion(EstimatorKind::list_additive, g, eps, seed, opts);
}

Estimate estimate_matrix_additive(const Graph& g, double eps, uint64_t seed,
                                  EstimatorOptions opts) {
  return run_to_completion(EstimatorKind::matrix_additive, g, eps, seed, opts);
}

Estimate race_instances(
    const std::function<std::unique_ptr<EstimatorInstance>(uint64_t seed)>& factory,
    uint64_t count, uint64_t master_seed, uint64_t quantum) {
  if (count < 1) throw std::invalid_argument("race_instances: count must be >= 1");
  if (quantum < 1) throw std::invalid_argument("race_instances: quantum must be >= 1");
  std::vector<std::unique_ptr<EstimatorInstance>> instances;
  instances.reserve(count);
  for (uint64_t j = 0; j < count; ++j) instances.push_back(factory(derive_seed(master_seed, j)));

  while (true) {
    for (uint64_t j = 0; j < count; ++j) {
      EstimatorInstance& inst = *instances[j];
      const uint64_t budget_end = inst.cost() + quantum;
      while (!inst.done() && inst.cost() < budget_end) inst.step();
      if (inst.done()) return inst.finish();
    }
  }
}

}  // namespace submatch
