#include <gtest/gtest.h>

#include "pgw/commuting1d_backend.hpp"
#include "pgw/dense_backend.hpp"
#include "pgw/stochastic_backend.hpp"
#include "test_support.hpp"

using namespace pgw;
using testing_support::oracle_matrix;

namespace {

GibbsParams random_params(std::size_t m, std::uint64_t seed, double scale) {
  Rng rng(seed);
  GibbsParams p(m);
  p.lambda_c = scale * (2 * rng.uniform() - 1);
  for (auto& a : p.lambda_a) a = scale * (2 * rng.uniform() - 1);
  return p;
}

oracle::Mat exponent(const Instance& inst, const ConstraintSet& s, const GibbsParams& p) {
  oracle::Mat e = oracle_matrix(inst.op) * (p.lambda_c / inst.op.norm_upper_bound());
  for (std::size_t a = 0; a < s.size(); ++a)
    e += p.lambda_a[a] * oracle::pauli(oracle::z_label(s[a].to_string()));
  return e;
}

std::vector<Observable> all_observables(const ConstraintSet& s) {
  std::vector<Observable> obs{Observable::objective()};
  for (const auto& z : s.z_strings()) obs.push_back(Observable::z_string(z));
  return obs;
}

}  // namespace

TEST(DenseBackend, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = gen_random_pauli(4, 7, seed);
    const auto s = ConstraintSet::all_z_strings(4);
    DenseBackend be(inst, s);
    const auto p = random_params(s.size(), seed, 2.0);
    const auto obs = all_observables(s);
    const auto r = be.expectations(p, obs);
    const oracle::Mat e = exponent(inst, s, p);
    const oracle::Mat rho = oracle::gibbs(e);
    EXPECT_NEAR(r.values[0], oracle::expect(rho, oracle_matrix(inst.op)) / inst.op.norm_upper_bound(), 1e-10);
    for (std::size_t a = 0; a < s.size(); ++a)
      EXPECT_NEAR(r.values[a + 1], oracle::expect(rho, oracle::pauli(oracle::z_label(s[a].to_string()))), 1e-10);
    EXPECT_NEAR(be.log_partition(p), oracle::log_partition(e), 1e-9);
    EXPECT_NEAR(be.purity(p), (rho * rho).trace().real(), 1e-9);
  }
}

TEST(DenseBackend, AmplitudeMatchesOracle) {
  const auto inst = gen_random_pauli(3, 5, 2);
  ConstraintSet s(3);
  s.add(BitVec::from_string("110"));
  DenseBackend be(inst, s);
  const auto p = random_params(1, 4, 1.5);
  const oracle::Mat u = oracle::expm_hermitian(exponent(inst, s, p));
  const auto ket = basis_product_state(5, 3);
  for (std::uint64_t b = 0; b < 8; ++b) EXPECT_NEAR(std::abs(be.amplitude(p, b, ket) - u(b, 5)), 0.0, 1e-10);
}

TEST(Commuting1dBackend, MatchesDenseOnCluster) {
  for (int n : {8, 9}) {
    const auto inst = gen_cluster1d(n, 3);
    const auto s = enumerate_traceless(diagonal_group(inst.op));
    DenseBackend dense(inst, s);
    Commuting1dBackend c1(inst, s);
    const auto obs = all_observables(s);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto p = random_params(s.size(), 100 + seed, 3.0);
      const auto a = dense.expectations(p, obs), b = c1.expectations(p, obs);
      for (std::size_t i = 0; i < obs.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
      EXPECT_NEAR(dense.log_partition(p), c1.log_partition(p), 1e-9);
    }
  }
}

TEST(Commuting1dBackend, AmplitudesMatchDense) {
  const auto inst = gen_cluster1d(8, 5);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  DenseBackend dense(inst, s);
  Commuting1dBackend c1(inst, s);
  const auto p = random_params(s.size(), 9, 2.0);
  ProductState ket(8);
  Rng rng(1);
  for (auto& q : ket) q = {std::complex<double>(rng.normal(), rng.normal()), std::complex<double>(rng.normal(), rng.normal())};
  std::vector<std::uint64_t> bras{0, 3, 77, 255, 128};
  const auto a = dense.amplitudes(p, bras, ket), b = c1.amplitudes(p, bras, ket);
  // equal up to one common positive factor
  const double f = std::abs(a[0]) / std::abs(b[0]);
  for (std::size_t i = 0; i < bras.size(); ++i) EXPECT_NEAR(std::abs(a[i] - f * b[i]), 0.0, 1e-9 * std::abs(a[0]));
  EXPECT_NEAR(std::abs(c1.amplitude(p, 77, ket) - dense.amplitude(p, 77, ket)), 0.0, 1e-9 * std::abs(a[2]) + 1e-12);
}

TEST(Commuting1dBackend, FiniteDifferenceMode) {
  const auto inst = gen_cluster1d(8, 2);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  Commuting1dConfig cfg;
  cfg.mode = ExpectationMode::finite_difference;
  Commuting1dBackend fd(inst, s, cfg);
  DenseBackend dense(inst, s);
  const auto obs = all_observables(s);
  const auto p = random_params(s.size(), 3, 1.0);
  const auto a = dense.expectations(p, obs), b = fd.expectations(p, obs);
  for (std::size_t i = 0; i < obs.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-6);
}

TEST(StochasticBackend, WithinThreeStdErr) {
  const auto inst = gen_cluster1d(9, 1);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  DenseBackend dense(inst, s);
  StochasticConfig cfg;
  cfg.seed = 5;
  StochasticBackend st(inst, s, cfg);
  const auto obs = all_observables(s);
  const auto p = random_params(s.size(), 8, 2.0);
  const auto a = dense.expectations(p, obs), b = st.expectations(p, obs);
  for (std::size_t i = 0; i < obs.size(); ++i) {
    EXPECT_GT(b.std_err[i], 0.0);
    EXPECT_LE(std::abs(a.values[i] - b.values[i]), 3 * b.std_err[i] + 1e-12) << i;
  }
}

TEST(StochasticBackend, ExpMatchesDense) {
  const auto inst = gen_random_pauli(5, 9, 3);
  ConstraintSet s(5);
  DenseBackend dense(inst, s);
  StochasticBackend st(inst, s);
  GibbsParams p(0);
  p.lambda_c = 6.0;
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(32);
  double ls = 0.0;
  Eigen::VectorXcd got = st.apply_exp(p, 1.0, v, &ls);
  got *= std::exp(ls);
  EXPECT_LT((got - dense.apply_exp(p, v)).norm(), 1e-8 * got.norm());
}

TEST(StochasticBackend, DeterministicAcrossThreads) {
  const auto inst = gen_cluster1d(8, 1);
  const auto s = enumerate_traceless(diagonal_group(inst.op));
  StochasticConfig c1, c4;
  c4.threads = 4;
  StochasticBackend a(inst, s, c1), b(inst, s, c4);
  const auto obs = all_observables(s);
  const auto p = random_params(s.size(), 2, 1.0);
  EXPECT_EQ(a.expectations(p, obs).values, b.expectations(p, obs).values);
}

TEST(BackendSelection, Policy) {
  BackendConfig cfg;
  EXPECT_EQ(select_backend(gen_cluster1d(30, 1), cfg), BackendKind::commuting1d);
  EXPECT_EQ(select_backend(gen_random_pauli(6, 5, 1), cfg), BackendKind::dense);
  EXPECT_EQ(select_backend(gen_random_pauli(14, 5, 1), cfg), BackendKind::stochastic);
  EXPECT_ANY_THROW(select_backend(gen_random_pauli(40, 5, 1), cfg));
}
