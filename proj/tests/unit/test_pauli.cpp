#include <gtest/gtest.h>

#include "pgw/dense.hpp"
#include "pgw/pauli.hpp"
#include "pgw/pauli_operator.hpp"
#include "test_support.hpp"

using namespace pgw;
using testing_support::random_label;

TEST(BitVec, StringRoundTripAndIndex) {
  const auto b = BitVec::from_string("1011");
  EXPECT_EQ(b.to_string(), "1011");
  EXPECT_EQ(b.to_index(), 0b1011u);
  EXPECT_EQ(BitVec::from_index(0b0110, 4).to_string(), "0110");
  EXPECT_EQ(b.popcount(), 3);
  EXPECT_TRUE(BitVec::from_string("0111") < BitVec::from_string("1000"));
}

TEST(BitVec, WideVectors) {
  BitVec a(130), b(130);
  a.set(0);
  a.set(129);
  b.set(129);
  EXPECT_EQ((a ^ b).popcount(), 1);
  EXPECT_EQ(BitVec::and_popcount(a, b), 1);
  EXPECT_EQ(a.last(), 129);
  EXPECT_EQ(a.first(), 0);
}

TEST(Pauli, LabelRoundTrip) {
  for (const char* l : {"I", "XYZI", "YYYY", "IIZX"}) EXPECT_EQ(PauliString::from_label(l).label(), l);
  const auto p = PauliString::from_label("XYZI");
  EXPECT_EQ(p.x().to_string(), "1100");
  EXPECT_EQ(p.z().to_string(), "0110");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_FALSE(p.is_real());
  EXPECT_EQ(p.support_lo(), 0);
  EXPECT_EQ(p.support_hi(), 2);
}

TEST(Pauli, DenseMatchesKroneckerOracle) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto l = random_label(rng, 3);
    EXPECT_LT((to_dense(PauliString::from_label(l)) - oracle::pauli(l)).norm(), 1e-14) << l;
  }
}

TEST(Pauli, ProductPhaseMatchesOracle) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_label(rng, 3), b = random_label(rng, 3);
    const auto prod = pauli_mul(PauliString::from_label(a), PauliString::from_label(b));
    const oracle::Mat expect = oracle::pauli(a) * oracle::pauli(b);
    const oracle::Mat got = prod.phase.value() * oracle::pauli(prod.pauli.label());
    EXPECT_LT((expect - got).norm(), 1e-13) << a << "*" << b;
  }
  const auto xy = pauli_mul(PauliString::from_label("X"), PauliString::from_label("Y"));
  EXPECT_EQ(xy.pauli.label(), "Z");
  EXPECT_EQ(xy.phase.k, 1);
}

TEST(Pauli, CommutationMatchesOracle) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_label(rng, 4), b = random_label(rng, 4);
    const auto pa = oracle::pauli(a), pb = oracle::pauli(b);
    const bool dense_commutes = (pa * pb - pb * pa).norm() < 1e-12;
    EXPECT_EQ(commutes(PauliString::from_label(a), PauliString::from_label(b)), dense_commutes);
  }
}

TEST(Pauli, BasisActionMatchesOracle) {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const auto l = random_label(rng, 4);
    const auto m = oracle::pauli(l);
    const auto p = PauliString::from_label(l);
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto img = apply_to_basis(p, b);
      EXPECT_LT(std::abs(m(static_cast<Eigen::Index>(img.index), static_cast<Eigen::Index>(b)) - img.phase.value()),
                1e-14);
    }
  }
}

TEST(PauliOperator, MergesAndCancels) {
  PauliOperator op(2);
  op.add("XX", 1.0);
  op.add("ZZ", -0.5);
  op.add("XX", 0.25);
  EXPECT_EQ(op.size(), 2u);
  EXPECT_DOUBLE_EQ(op.coeff(PauliString::from_label("XX")), 1.25);
  EXPECT_DOUBLE_EQ(op.pauli_l1(), 1.75);
  op.add("ZZ", 0.5);
  EXPECT_EQ(op.size(), 1u);
  EXPECT_DOUBLE_EQ(op.pauli_l1(), 1.25);
  EXPECT_TRUE(op.is_real_symmetric());
}

TEST(PauliOperator, LambdaMaxAgainstOracle) {
  PauliOperator op(3);
  op.add("XXI", 0.7);
  op.add("IZZ", -0.3);
  op.add("YIY", 0.2);
  EXPECT_NEAR(lambda_max(op), oracle::lambda_max(testing_support::oracle_matrix(op)), 1e-12);
}

TEST(PauliOperator, CommutationReport) {
  PauliOperator op(2);
  op.add("XI", 1.0);
  op.add("ZI", 1.0);
  op.add("IZ", 1.0);
  const auto r = commutation_report(op);
  EXPECT_FALSE(r.fully_commuting);
  EXPECT_EQ(r.anticommuting_pair_count, 1);
}
