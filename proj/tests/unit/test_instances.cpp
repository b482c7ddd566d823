#include <gtest/gtest.h>

#include <filesystem>

#include "pgw/dense.hpp"
#include "pgw/instance_io.hpp"
#include "pgw/instances.hpp"
#include "test_support.hpp"

using namespace pgw;

TEST(Instances, Cluster1dShape) {
  for (int n : {7, 10, 50}) {
    const auto inst = gen_cluster1d(n, 7);
    EXPECT_EQ(inst.op.size(), static_cast<std::size_t>(2 * n - 4));
    EXPECT_TRUE(inst.flags.commuting_1d);
    EXPECT_TRUE(inst.flags.real_symmetric);
    EXPECT_NO_THROW(validate(inst));
    EXPECT_NEAR(inst.op.pauli_l1(), 1.0, 1e-12);
  }
  EXPECT_EQ(gen_cluster1d(12, 3), gen_cluster1d(12, 3));
  EXPECT_FALSE(gen_cluster1d(12, 3) == gen_cluster1d(12, 4));
}

TEST(Instances, HammingFamily) {
  const auto h = gen_hamming_family(3, 1, HammingMode::hypercube);
  EXPECT_EQ(h.op.size(), 3u);
  EXPECT_EQ(gen_hamming_family(4, 2, HammingMode::hamming_k).op.size(), 6u);
  const auto c = gen_hamming_family(3, 0, HammingMode::complete);
  EXPECT_EQ(c.op.size(), 7u);
  const Eigen::MatrixXd d = to_dense_real(c.op);
  const Eigen::MatrixXd expect = (Eigen::MatrixXd::Constant(8, 8, 1.0) - Eigen::MatrixXd::Identity(8, 8)) / 8.0;
  EXPECT_LT((d - expect).norm(), 1e-12);
}

TEST(Instances, StructureReport) {
  const auto r = structure_report(gen_hamming_family(4, 1, HammingMode::hypercube), 4);
  EXPECT_TRUE(r.walk_regular);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.fully_commuting);
}

TEST(Instances, ValidateRejects) {
  auto inst = gen_commuting4();
  inst.flags.real_symmetric = true;
  PauliOperator bad(4);
  bad.add("YIII", 1.0);
  inst.op = bad;
  EXPECT_THROW(validate(inst), std::invalid_argument);
}

TEST(Instances, DecomposeDenseRoundTrip) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(8, 8);
  a = (a + a.transpose()).eval();
  const auto op = decompose_dense(a);
  EXPECT_LT((to_dense_real(op) - a).norm(), 1e-12);
}

TEST(Instances, KroneckerL1AndDense) {
  KroneckerSpec spec;
  spec.factors = {default_initiator()};
  spec.repetitions = 2;
  const auto ki = gen_kronecker(spec);
  EXPECT_EQ(ki.total_qubits, 4);
  EXPECT_NEAR(ki.l1, ki.factor_ops[0].pauli_l1() * ki.factor_ops[0].pauli_l1(), 1e-12);
  const auto op = ki.explicit_operator();
  EXPECT_LT((to_dense_real(op) - ki.dense()).norm(), 1e-10);
  const Eigen::MatrixXd f = default_initiator() / default_initiator().operatorNorm();
  const oracle::Mat fc = f.cast<std::complex<double>>();
  EXPECT_LT((oracle::kron(fc, fc).real() - ki.dense()).norm(), 1e-10);
}

TEST(InstanceIo, JsonRoundTrip) {
  for (const auto& inst : {gen_cluster1d(9, 2), gen_commuting4(), gen_random_pauli(4, 5, 1)}) {
    EXPECT_EQ(instance_from_json(instance_to_json(inst)), inst);
    EXPECT_EQ(instance_to_json(instance_from_json(instance_to_json(inst))), instance_to_json(inst));
  }
}

TEST(InstanceIo, SchemaFields) {
  const auto text = instance_to_json(gen_hamming_family(2, 1, HammingMode::hypercube));
  for (const char* key : {"\"n\"", "\"terms\"", "\"x\"", "\"z\"", "\"coeff\"", "\"norm_upper_bound\"", "\"flags\"",
                          "\"real_symmetric\"", "\"commuting_1d\"", "\"window_width\"", "\"seed\"", "\"metadata\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}

TEST(InstanceIo, RejectsMalformed) {
  EXPECT_ANY_THROW(instance_from_json("{\"n\": 2, \"terms\": [{\"x\": \"1\", \"z\": \"00\", \"coeff\": 1}]}"));
  EXPECT_ANY_THROW(instance_from_json("{\"n\": 2, \"terms\": [{\"x\": \"10\", \"z\": \"00\", \"coeff\": 0}]}"));
  EXPECT_ANY_THROW(instance_from_json("not json"));
}

TEST(InstanceIo, KroneckerSpecRoundTrip) {
  KroneckerSpec spec;
  spec.factors = {default_initiator()};
  spec.repetitions = 3;
  const auto back = kronecker_spec_from_json(kronecker_spec_to_json(spec));
  EXPECT_EQ(back.repetitions, 3);
  EXPECT_LT((back.factors[0] - spec.factors[0]).norm(), 1e-15);
}
