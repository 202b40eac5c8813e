#include <benchmark/benchmark.h>

#include "bethe/random.hpp"
#include "bethe/tableaux.hpp"

namespace {

using namespace bethe;

void BM_Qsym(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  std::vector<VarLabel> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(VarLabel::t(1, i));
  AlgElem g(random_scalar(vars, rng, true));
  Segment seg = Segment::canonical(MultiIndex({n}));
  for (auto _ : state) benchmark::DoNotOptimize(qsym(g, seg));
}
BENCHMARK(BM_Qsym)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Star(benchmark::State& state) {
  Rng rng(2);
  MultiIndex b({static_cast<int>(state.range(0)), 1});
  GenSeries a = random_scalar_series(3, b, rng);
  GenSeries c = random_scalar_series(3, b, rng);
  for (auto _ : state) benchmark::DoNotOptimize(star(a, c, b));
}
BENCHMARK(BM_Star)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Invert(benchmark::State& state) {
  MultiIndex b({static_cast<int>(state.range(0))});
  GenSeries e = opaque_e_series(2, b);
  for (auto _ : state) benchmark::DoNotOptimize(invert(e, b));
}
BENCHMARK(BM_Invert)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  MultiIndex b({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_inverse(2, b));
}
BENCHMARK(BM_ClosedForm)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
