#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgw/gibbs.hpp"

namespace pgw {

enum class StepMode { fixed, adaptive };
enum class BudgetMode { iterations, squared_decrement };

struct HUPolicy {
  StepMode step_mode = StepMode::fixed;
  double eta = 0.0;             // 0: eps / 4
  BudgetMode budget_mode = BudgetMode::iterations;
  long max_iterations = 0;      // 0: ceil(16 n / eps^2)
};

enum class HUStatus { feasible, infeasible };

struct HUOutcome {
  HUStatus status = HUStatus::infeasible;
  GibbsParams lambda;           // final iterate
  ExpectationResult final_expectations;
  long iterations_used = 0;
  long oracle_calls = 0;
  int accuracy_level = 0;       // probe escalation reached (stochastic)
};

// Observables passed to the backend: [objective, Z_1, ..., Z_m].
HUOutcome hu_feasibility(const GibbsBackend& backend, double eps, double mu, const HUPolicy& policy = {});

struct SearchStep {
  double mu = 0.0;
  HUStatus status = HUStatus::infeasible;
  long iterations = 0;
};

struct SolveReport {
  double gw_lower = -1.0;
  double gw_upper = 1.0;
  double eps = 0.0;
  GibbsParams lambda_star;      // from the last feasible run
  bool has_lambda_star = false;
  std::vector<SearchStep> search_trace;
  double wall_time_s = 0.0;
  BackendKind backend_kind = BackendKind::automatic;
  std::size_t constraint_count = 0;
  long iterations = 0;
  long oracle_calls = 0;
  std::vector<std::string> notes;
};

SolveReport gw_binary_search(const GibbsBackend& backend, double eps, const HUPolicy& policy = {});

// gw * 2^n * norm_c
double gw_to_ugw(double gw, int n, double norm_c);

long default_max_iterations(std::size_t n, double eps);

std::string to_string(HUStatus s);

}  // namespace pgw
