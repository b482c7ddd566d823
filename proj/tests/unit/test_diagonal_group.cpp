#include <gtest/gtest.h>

#include <set>

#include "pgw/diagonal_group.hpp"
#include "pgw/instances.hpp"

using namespace pgw;

namespace {

std::set<std::string> strings(const ConstraintSet& s) {
  std::set<std::string> out;
  for (const auto& z : s.z_strings()) out.insert(z.to_string());
  return out;
}

std::string zz(int n, std::initializer_list<int> qubits) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q : qubits) s[static_cast<std::size_t>(q - 1)] = '1';
  return s;
}

// Brute-force closure: every product of a subset of support Paulis.
std::set<std::string> closure_diagonals(const PauliOperator& op) {
  std::set<std::string> out;
  const std::size_t m = op.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    PauliString acc = PauliString::identity(op.n());
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1u) acc = pauli_mul(acc, op[i].pauli).pauli;
    if (acc.is_diagonal() && !acc.is_identity()) out.insert(acc.z().to_string());
  }
  return out;
}

}  // namespace

TEST(DiagonalGroup, Commuting4) {
  const auto g = diagonal_group(gen_commuting4().op);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(strings(enumerate_traceless(g)), (std::set<std::string>{"1100", "0110", "1010"}));
}

TEST(DiagonalGroup, Cluster1dAllSizes) {
  for (int n = 7; n <= 20; ++n) {
    const auto s = enumerate_traceless(diagonal_group(gen_cluster1d(n, 1).op));
    EXPECT_EQ(strings(s), (std::set<std::string>{zz(n, {n - 3, n - 2}), zz(n, {n - 2, n - 1}), zz(n, {n - 3, n - 1})}))
        << "n=" << n;
  }
}

TEST(DiagonalGroup, HypercubeTrivial) {
  EXPECT_TRUE(diagonal_group(gen_hamming_family(6, 1, HammingMode::hypercube).op).trivial());
}

TEST(DiagonalGroup, MatchesSubsetClosure) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = gen_random_pauli(4, 6, seed);
    const auto g = diagonal_group(inst.op);
    EXPECT_EQ(strings(enumerate_traceless(g)), closure_diagonals(inst.op)) << seed;
  }
}

TEST(DiagonalGroup, MembershipAndCap) {
  const auto g = diagonal_group(gen_commuting4().op);
  EXPECT_TRUE(g.contains(BitVec::from_string("1010")));
  EXPECT_FALSE(g.contains(BitVec::from_string("0001")));
  EXPECT_THROW(enumerate_traceless(g, 2), CapExceeded);
}

TEST(Krylov, NestedAndBoundedByGroup) {
  const auto inst = gen_random_pauli(5, 8, 4);
  const auto full = strings(enumerate_traceless(diagonal_group(inst.op)));
  std::size_t prev = 0;
  for (int k = 1; k <= 4; ++k) {
    const auto kr = krylov_constraints(inst.op, k);
    EXPECT_FALSE(kr.truncated);
    const auto s = strings(kr.constraints);
    EXPECT_GE(s.size(), prev);
    prev = s.size();
    for (const auto& z : s) EXPECT_TRUE(full.count(z)) << z;
  }
}

TEST(Krylov, PairProductsByHand) {
  PauliOperator op(2);
  op.add("XX", 1.0);
  op.add("YY", 1.0);
  op.add("XI", 1.0);
  // XX*YY = -ZZ; nothing diagonal from single terms
  EXPECT_EQ(strings(krylov_constraints(op, 1).constraints).size(), 0u);
  EXPECT_EQ(strings(krylov_constraints(op, 2).constraints), (std::set<std::string>{"11"}));
}

TEST(Gf2, RrefDropsDependentRows) {
  std::vector<BitVec> rows{BitVec::from_string("110"), BitVec::from_string("011"), BitVec::from_string("101")};
  EXPECT_EQ(gf2_rref(rows).size(), 2u);
}
