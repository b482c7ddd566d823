#include <gtest/gtest.h>

#include "pgw/commuting1d_backend.hpp"
#include "pgw/dense.hpp"
#include "pgw/dense_backend.hpp"
#include "pgw/hu_solver.hpp"

using namespace pgw;

TEST(HU, TrivialMuIsFeasibleImmediately) {
  const auto inst = gen_commuting4();
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  DenseBackend be(inst, s);
  const auto o = hu_feasibility(be, 0.1, -1.0);
  EXPECT_EQ(o.status, HUStatus::feasible);
  EXPECT_EQ(o.iterations_used, 0);
}

TEST(HU, ImpossibleMuIsInfeasible) {
  const auto inst = gen_commuting4();
  ConstraintSet s(4);
  DenseBackend be(inst, s);
  HUPolicy pol;
  pol.max_iterations = 200;
  const auto o = hu_feasibility(be, 0.1, 1.5, pol);
  EXPECT_EQ(o.status, HUStatus::infeasible);
  EXPECT_EQ(o.iterations_used, 200);
}

TEST(HU, SpectralBracketOnHypercube) {
  const auto inst = gen_hamming_family(4, 1, HammingMode::hypercube);
  ConstraintSet s(4);
  DenseBackend be(inst, s);
  const double eps = 0.1;
  const auto r = gw_binary_search(be, eps);
  const double top = lambda_max(inst.op) / inst.op.norm_upper_bound();
  EXPECT_LE(r.gw_upper - r.gw_lower, eps * (1 + 1e-9));
  EXPECT_GE(top, r.gw_lower - eps);
  EXPECT_LE(top, r.gw_upper + eps);
  EXPECT_TRUE(r.has_lambda_star);
}

TEST(HU, ConstraintsLowerTheValue) {
  const auto inst = gen_commuting4();
  const auto full = enumerate_traceless(diagonal_group(inst.op));
  DenseBackend spectral(inst, ConstraintSet(4)), gw(inst, full);
  const double eps = 0.1;
  const auto a = gw_binary_search(spectral, eps), b = gw_binary_search(gw, eps);
  EXPECT_LE(b.gw_upper, a.gw_upper + 2 * eps);
}

TEST(HU, AdaptiveAndSquaredBudgetRun) {
  const auto inst = gen_cluster1d(8, 2);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  Commuting1dBackend be(inst, s);
  HUPolicy pol;
  pol.step_mode = StepMode::adaptive;
  pol.budget_mode = BudgetMode::squared_decrement;
  const auto r = gw_binary_search(be, 0.2, pol);
  EXPECT_LE(r.gw_upper - r.gw_lower, 0.2 * (1 + 1e-9));
  EXPECT_FALSE(r.notes.empty());
}

TEST(HU, Deterministic) {
  const auto inst = gen_cluster1d(8, 4);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  Commuting1dBackend be(inst, s);
  const auto a = gw_binary_search(be, 0.2), b = gw_binary_search(be, 0.2);
  EXPECT_EQ(a.gw_lower, b.gw_lower);
  EXPECT_EQ(a.lambda_star, b.lambda_star);
}

TEST(HU, Helpers) {
  EXPECT_EQ(default_max_iterations(4, 0.5), 256);
  EXPECT_DOUBLE_EQ(gw_to_ugw(0.5, 3, 2.0), 8.0);
}
