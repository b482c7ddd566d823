#include "pgw/hu_solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pgw {

std::string to_string(HUStatus s) { return s == HUStatus::feasible ? "feasible" : "infeasible"; }

long default_max_iterations(std::size_t n, double eps) {
  return static_cast<long>(std::ceil(16.0 * static_cast<double>(n) / (eps * eps)));
}

double gw_to_ugw(double gw, int n, double norm_c) { return gw * std::ldexp(1.0, n) * norm_c; }

HUOutcome hu_feasibility(const GibbsBackend& backend, double eps, double mu, const HUPolicy& policy) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const auto& S = backend.constraints();
  const double eta = policy.eta > 0.0 ? policy.eta : eps / 4.0;
  double budget = static_cast<double>(policy.max_iterations > 0 ? policy.max_iterations
                                                                : default_max_iterations(backend.n(), eps));

  std::vector<Observable> obs{Observable::objective()};
  for (const auto& z : S.z_strings()) obs.push_back(Observable::z_string(z));

  HUOutcome out;
  out.lambda = GibbsParams(S.size());
  auto& lam = out.lambda;
  for (;;) {
    auto res = backend.expectations(lam, obs, out.accuracy_level);
    ++out.oracle_calls;
    while (res.max_std_err() > eps / 4.0 && out.accuracy_level < backend.max_accuracy_level()) {
      res = backend.expectations(lam, obs, ++out.accuracy_level);
      ++out.oracle_calls;
    }
    for (std::size_t i = 0; i < res.values.size(); ++i)
      if (!std::isfinite(res.values[i])) {
        std::ostringstream msg;
        msg << "non-finite expectation for observable " << i << " at iteration " << out.iterations_used
            << " (lambda_c=" << lam.lambda_c << ", |lambda|_1=" << lam.l1() << ")";
        throw std::runtime_error(msg.str());
      }
    const double mu_c = res.values[0];

    std::size_t worst = 0;
    double worst_abs = eps;
    for (std::size_t a = 0; a < S.size(); ++a) {
      const double v = std::abs(res.values[a + 1]);
      // ties go to the lexicographically smaller Z-string
      if (v > worst_abs || (worst > 0 && v == worst_abs && S[a] < S[worst - 1])) {
        worst_abs = v;
        worst = a + 1;
      }
    }
    out.final_expectations = std::move(res);
    if (mu_c >= mu - eps && worst == 0) {
      out.status = HUStatus::feasible;
      return out;
    }
    if (budget <= 0.0) {
      out.status = HUStatus::infeasible;
      return out;
    }

    double step;
    if (mu_c < mu - eps) {
      step = policy.step_mode == StepMode::fixed ? eta : mu - mu_c;
      lam.lambda_c += step;
    } else {
      const double v = out.final_expectations.values[worst];
      step = policy.step_mode == StepMode::fixed ? eta : std::abs(v);
      lam.lambda_a[worst - 1] -= v > 0 ? step : -step;
    }
    budget -= policy.budget_mode == BudgetMode::iterations ? 1.0 : step * step;
    ++out.iterations_used;
  }
}

SolveReport gw_binary_search(const GibbsBackend& backend, double eps, const HUPolicy& policy) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.eps = eps;
  rep.backend_kind = backend.kind();
  rep.constraint_count = backend.constraints().size();
  rep.lambda_star = GibbsParams(backend.constraints().size());
  double lo = -1.0, hi = 1.0;
  // width <= eps terminates; the slack absorbs rounding in the halving
  while (hi - lo > eps * (1.0 + 1e-12)) {
    const double mid = 0.5 * (lo + hi);
    const HUOutcome o = hu_feasibility(backend, eps, mid, policy);
    rep.search_trace.push_back({mid, o.status, o.iterations_used});
    rep.iterations += o.iterations_used;
    rep.oracle_calls += o.oracle_calls;
    if (o.status == HUStatus::feasible) {
      lo = mid;
      rep.lambda_star = o.lambda;
      rep.has_lambda_star = true;
    } else {
      hi = mid;
    }
  }
  rep.gw_lower = lo;
  rep.gw_upper = hi;
  if (policy.step_mode == StepMode::adaptive)
    rep.notes.push_back("adaptive constraint steps use |mu_A| as the step length");
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace pgw
