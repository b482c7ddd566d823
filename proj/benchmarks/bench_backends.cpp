#include <benchmark/benchmark.h>

#include "pgw/commuting1d_backend.hpp"
#include "pgw/dense_backend.hpp"
#include "pgw/instances.hpp"
#include "pgw/stochastic_backend.hpp"

using namespace pgw;

namespace {

struct Setup {
  Instance inst;
  ConstraintSet s;
  GibbsParams p;
  std::vector<Observable> obs;

  explicit Setup(int n) : inst(gen_cluster1d(n, 4)), s(enumerate_traceless(diagonal_group(inst.op))), p(s.size()) {
    p.lambda_c = 3.0;
    for (std::size_t a = 0; a < s.size(); ++a) p.lambda_a[a] = 0.5 - 0.3 * static_cast<double>(a);
    obs.push_back(Observable::objective());
    for (const auto& z : s.z_strings()) obs.push_back(Observable::z_string(z));
  }
};

template <class Backend>
void expectations(benchmark::State& state) {
  Setup su(static_cast<int>(state.range(0)));
  Backend be(su.inst, su.s);
  for (auto _ : state) benchmark::DoNotOptimize(be.expectations(su.p, su.obs));
}

}  // namespace

BENCHMARK_TEMPLATE(expectations, DenseBackend)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(expectations, StochasticBackend)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(expectations, Commuting1dBackend)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMicrosecond);

static void BM_Commuting1dAmplitude(benchmark::State& state) {
  Setup su(static_cast<int>(state.range(0)));
  Commuting1dBackend be(su.inst, su.s);
  const auto ket = basis_product_state(0, su.inst.n());
  std::uint64_t b = 0;
  for (auto _ : state) benchmark::DoNotOptimize(be.amplitude(su.p, b++, ket));
}
BENCHMARK(BM_Commuting1dAmplitude)->Arg(10)->Arg(50)->Unit(benchmark::kMicrosecond);
