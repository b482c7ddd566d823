#include <gtest/gtest.h>

#include "pgw/commuting1d_backend.hpp"
#include "pgw/dense_backend.hpp"
#include "pgw/rounding.hpp"
#include "test_support.hpp"

using namespace pgw;

TEST(Rounding, RotationDeterministic) {
  const auto a = sample_rotation(6, 3), b = sample_rotation(6, 3);
  EXPECT_EQ(a.angles, b.angles);
  for (const auto& t : a.angles)
    for (double v : t) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 2 * M_PI);
    }
}

TEST(Rounding, KetIsUnitAndMatchesRotationProduct) {
  const auto r = sample_rotation(1, 8);
  const auto [phi, omega, theta] = r.angles[0];
  const std::complex<double> i(0, 1);
  oracle::Mat rz_phi(2, 2), ry(2, 2), rz_om(2, 2);
  rz_phi << std::exp(-i * phi / 2.0), 0, 0, std::exp(i * phi / 2.0);
  rz_om << std::exp(-i * omega / 2.0), 0, 0, std::exp(i * omega / 2.0);
  ry << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  const oracle::Mat u = rz_om * ry * rz_phi;
  const auto k = r.ket()[0];
  EXPECT_NEAR(std::abs(k[0] - u(0, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(k[1] - u(1, 0)), 0.0, 1e-14);
}

TEST(Rounding, EnergyDensityXX) {
  PauliOperator c(2);
  c.add("XX", 1.0);
  EXPECT_DOUBLE_EQ(energy_density_exact(std::vector<std::int8_t>(4, 1), c), 1.0);
  EXPECT_DOUBLE_EQ(energy_density_exact(std::vector<std::int8_t>(4, 1), c.scaled(-1.0)), -1.0);
}

TEST(Rounding, EnergyDensityMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = gen_random_pauli(5, 8, seed);
    Rng rng(seed);
    std::vector<std::int8_t> x(32);
    Eigen::VectorXcd xv(32);
    for (int i = 0; i < 32; ++i) {
      x[i] = rng.uniform() < 0.5 ? -1 : 1;
      xv[i] = x[i];
    }
    const double expect = (xv.adjoint() * testing_support::oracle_matrix(inst.op) * xv)(0, 0).real() / 32.0;
    EXPECT_NEAR(energy_density_exact(x, inst.op), expect, 1e-12);
  }
}

TEST(Rounding, ZeroLambdaZeroAnglesAllPlus) {
  const auto inst = gen_random_pauli(4, 5, 1);
  DenseBackend be(inst, ConstraintSet(4));
  RotationSpec rot;
  rot.angles.assign(4, {0.0, 0.0, 0.0});
  const auto r = round_explicit(be, GibbsParams(0), rot);
  for (auto v : r.x) EXPECT_EQ(v, 1);
}

TEST(Rounding, LargeLambdaGivesTopEigenvectorSigns) {
  const auto inst = gen_random_pauli(4, 6, 20);
  DenseBackend be(inst, ConstraintSet(4));
  const oracle::Mat h = testing_support::oracle_matrix(inst.op);
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(h);
  ASSERT_GT(es.eigenvalues()[15] - es.eigenvalues()[14], 1e-3);
  Eigen::VectorXcd v = es.eigenvectors().col(15);
  GibbsParams p(0);
  p.lambda_c = 400.0;
  const auto rot = sample_rotation(4, 2);
  const auto r = round_explicit(be, p, rot);
  // exp(E/2) U|0> ~ v <v|U|0>; align the phase and compare signs
  std::complex<double> ov = 0.0;
  const auto ket = rot.ket();
  for (int b = 0; b < 16; ++b) {
    std::complex<double> a = 1.0;
    for (int q = 0; q < 4; ++q) a *= ket[q][(b >> (3 - q)) & 1];
    ov += std::conj(v[b]) * a;
  }
  for (int b = 0; b < 16; ++b) {
    const double re = (v[b] * ov).real();
    if (std::abs(re) > 1e-6) EXPECT_EQ(r.x[b], re < 0 ? -1 : 1) << b;
  }
}

TEST(Rounding, MonteCarloTracksExact) {
  const auto inst = gen_cluster1d(10, 3);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  Commuting1dBackend be(inst, s);
  GibbsParams p(s.size());
  p.lambda_c = 3.0;
  p.lambda_a = {0.4, -0.2, 0.1};
  const auto rot = sample_rotation(10, 4);
  const double exact = round_explicit(be, p, rot).energy_density;
  int misses = 0;
  const double eps = 0.3;
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    const auto mc = energy_density_mc(be, p, rot, eps, 1.0 / 3.0, rep);
    EXPECT_LE(mc.max_abs_sample, 1.0 + 1e-12);
    if (std::abs(mc.energy_density - exact) > eps) ++misses;
  }
  EXPECT_LE(misses, 7);
}

TEST(Rounding, MonteCarloThreadIndependent) {
  const auto inst = gen_cluster1d(8, 3);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  Commuting1dBackend be(inst, s);
  GibbsParams p(s.size());
  p.lambda_c = 2.0;
  const auto rot = sample_rotation(8, 1);
  const auto a = energy_density_mc(be, p, rot, 0.5, 1.0 / 3.0, 9, 1);
  const auto b = energy_density_mc(be, p, rot, 0.5, 1.0 / 3.0, 9, 3);
  EXPECT_EQ(a.energy_density, b.energy_density);
  EXPECT_EQ(a.samples_used, mc_sample_count(1.0, 0.5, 1.0 / 3.0));
}

TEST(Rounding, HaarHeuristicZeroLambda) {
  const auto inst = gen_random_pauli(8, 10, 2);
  const auto r = haar_round_heuristic(inst, ConstraintSet(8), GibbsParams(0), 50, 3);
  EXPECT_LE(std::abs(r.value), 3 * r.std_err + 1e-9);
}
