#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "submatch/graph.hpp"

namespace submatch {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct VerifyOutcome {
  std::vector<CheckResult> results;
  bool budget_exceeded = false;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

// Exhaustive small-instance suites shared by `bench verify` and the
// acceptance harness. Suites: oracle (local vs. global matching agreement
// over all permutations), rounds (query-path length vs. parallel rounds),
// vizing (exact maximum matching vs. the n*dbar/(4*Delta) floor), lazy
// (cross-mode distribution of |GMM|).
VerifyOutcome verify_oracle_suite(Deadline deadline = {});
VerifyOutcome verify_rounds_suite(Deadline deadline = {});
VerifyOutcome verify_vizing_suite(Deadline deadline = {});
VerifyOutcome verify_lazy_suite(Deadline deadline = {});
VerifyOutcome verify_suite(const std::string& name, Deadline deadline = {});

}  // namespace submatch
