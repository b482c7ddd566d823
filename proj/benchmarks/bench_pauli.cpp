#include <benchmark/benchmark.h>

#include "pgw/diagonal_group.hpp"
#include "pgw/instances.hpp"
#include "pgw/pauli.hpp"
#include "pgw/rng.hpp"

using namespace pgw;

static void BM_PauliMul(benchmark::State& state) {
  const auto inst = gen_cluster1d(static_cast<int>(state.range(0)), 1);
  const auto& terms = inst.op.terms();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = terms[i % terms.size()].pauli;
    const auto& b = terms[(i * 7 + 3) % terms.size()].pauli;
    benchmark::DoNotOptimize(pauli_mul(a, b));
    ++i;
  }
}
BENCHMARK(BM_PauliMul)->Arg(16)->Arg(64)->Arg(256);

static void BM_ApplyToBasis(benchmark::State& state) {
  const auto inst = gen_cluster1d(50, 2);
  Rng rng(3);
  for (auto _ : state)
    for (const auto& t : inst.op.terms()) benchmark::DoNotOptimize(apply_to_basis(t.pauli, rng.next_u64() >> 14));
}
BENCHMARK(BM_ApplyToBasis);

static void BM_DiagonalGroup(benchmark::State& state) {
  const auto inst = gen_cluster1d(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_group(inst.op));
}
BENCHMARK(BM_DiagonalGroup)->Arg(10)->Arg(50)->Arg(200);

static void BM_Krylov3(benchmark::State& state) {
  const auto inst = gen_random_pauli(8, 24, 5);
  for (auto _ : state) benchmark::DoNotOptimize(krylov_constraints(inst.op, 3));
}
BENCHMARK(BM_Krylov3);
