#include <gtest/gtest.h>

#include "pgw/certify.hpp"
#include "pgw/dense_backend.hpp"

using namespace pgw;

TEST(BruteForce, XX) {
  PauliOperator c(2);
  c.add("XX", 1.0);
  const auto r = brute_force_qubo(c);
  EXPECT_DOUBLE_EQ(r.value, 4.0);
  EXPECT_EQ(r.argmax, std::vector<std::int8_t>(4, 1));
}

TEST(BruteForce, DiagonalCancels) {
  PauliOperator c(1);
  c.add("Z", 1.0);
  EXPECT_DOUBLE_EQ(brute_force_qubo(c).value, 0.0);
  PauliOperator big(5);
  big.add("ZZZZZ", 1.0);
  EXPECT_THROW(brute_force_qubo(big), std::invalid_argument);
}

TEST(Xi, SingleSiteGivesV) {
  ConstraintSet s(3);
  for (const char* z : {"100", "010", "001"}) s.add(BitVec::from_string(z));
  const auto r = xi_lp(s, 0.7);
  EXPECT_FALSE(r.unbounded);
  EXPECT_NEAR(r.xi, 0.7, 1e-9);
}

TEST(Xi, Commuting4GivesThreeV) {
  const auto s = enumerate_traceless(diagonal_group(gen_commuting4().op));
  const auto r = xi_lp(s, 0.5);
  EXPECT_NEAR(r.xi, 1.5, 1e-9);
  EXPECT_EQ(r.pattern_count, 4u);
  EXPECT_EQ(r.lp_count, 2u);
}

TEST(Xi, SingleConstraint) {
  ConstraintSet s(2);
  s.add(BitVec::from_string("11"));
  EXPECT_NEAR(xi_lp(s, 1.0).xi, 1.0, 1e-9);
}

TEST(Xi, MonotoneAndHomogeneous) {
  const auto s = enumerate_traceless(diagonal_group(gen_cluster1d(8, 1).op));
  ConstraintSet fewer(8);
  fewer.add(s[0]);
  fewer.add(s[1]);
  const double full = xi_lp(s, 1.0).xi;
  EXPECT_LE(xi_lp(fewer, 1.0).xi, full + 1e-9);
  EXPECT_NEAR(xi_lp(s, 2.5).xi, 2.5 * full, 1e-9);
  EXPECT_EQ(xi_lp(s, 1.0, 12, 1).xi, xi_lp(s, 1.0, 12, 3).xi);
}

TEST(Xi, CapAndBadV) {
  EXPECT_THROW(xi_lp(ConstraintSet::all_z_strings(4), 1.0, 12), CapExceeded);
  EXPECT_THROW(xi_lp(ConstraintSet(2), 0.0), std::invalid_argument);
}

TEST(Stability, Values) {
  EXPECT_DOUBLE_EQ(stability_diag(0, 0.1, 1.0), 0.0);
  EXPECT_NEAR(stability_diag(2, 1e-3, 1.0), std::pow(3.0, 1.0 / 6.0) * 0.1, 1e-15);
  EXPECT_LT(stability_diag(2, 1e-3, 1.0), stability_diag(3, 1e-3, 1.0));
  EXPECT_LT(stability_diag(2, 1e-3, 1.0), stability_diag(2, 1e-2, 1.0));
}

TEST(Purity, NondegenerateAndZero) {
  const auto inst = gen_hamming_family(4, 1, HammingMode::hypercube);
  ASSERT_TRUE(diagonal_group(inst.op).trivial());
  DenseBackend be(inst, ConstraintSet(4));
  GibbsParams p(0);
  p.lambda_c = 1.0;
  const auto c = purity_uniqueness(be, p, {0.0, 10.0, 100.0, 1000.0}, 0.05);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(c.trace[0], 1.0 / 16.0, 1e-12);
  const auto z = purity_uniqueness(be, p, {0.0}, 0.05);
  EXPECT_FALSE(z.pass);
}

TEST(Purity, DegenerateTopFails) {
  // X (x) (X + Z): top eigenvalue sqrt(2) twice
  PauliOperator op(2);
  op.add("XX", 1.0);
  op.add("XZ", 1.0);
  Instance inst{op, {true, false, std::nullopt}, std::nullopt, {}};
  ASSERT_TRUE(diagonal_group(inst.op).trivial());
  DenseBackend be(inst, ConstraintSet(2));
  GibbsParams p(0);
  p.lambda_c = 1.0;
  const auto c = purity_uniqueness(be, p, {1.0, 100.0, 1000.0}, 0.3);
  EXPECT_FALSE(c.pass);
  EXPECT_LE(c.value("max_purity"), 0.5 + 1e-9);
}

TEST(Purity, RefusesNontrivialGroup) {
  const auto inst = gen_commuting4();
  DenseBackend be(inst, ConstraintSet(4));
  EXPECT_THROW(purity_uniqueness(be, GibbsParams(0), {1.0}, 0.1), std::invalid_argument);
}

TEST(Sandwich, Bookkeeping) {
  SolveReport gw;
  gw.gw_lower = 0.7;
  gw.gw_upper = 0.8;
  gw.eps = 0.1;
  RoundedSolution r;
  r.energy_density = 0.6;
  r.energy_stderr = 0.05;
  const auto c = sandwich_report(gw, r);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(c.value("ratio"), 0.75, 1e-15);
  EXPECT_NEAR(c.value("lower"), 0.55, 1e-15);
  EXPECT_NEAR(c.value("upper"), 0.9, 1e-15);
  r.lambda_half = GibbsParams(3);
  EXPECT_THROW(sandwich_report(gw, r), std::invalid_argument);
}
