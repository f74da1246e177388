#include <random>

#include <benchmark/benchmark.h>

#include "cybar/bar.hpp"
#include "cybar/homology.hpp"

namespace {

using namespace cybar;

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-20, 20);
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(32)->Arg(64);

void BM_NerveHomology(benchmark::State& state) {
  const auto g = builtin::cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology_table(*nerve(g, 5), 4));
}
BENCHMARK(BM_NerveHomology)->Arg(2)->Arg(3)->Arg(4);

void BM_ComparisonCheck(benchmark::State& state) {
  const auto g = state.range(0) == 6 ? builtin::symmetric3() : builtin::cyclic(static_cast<int>(state.range(0)));
  const Comparison c(builtin::translation_instance(g), 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_comparison(c, g->title()));
}
BENCHMARK(BM_ComparisonCheck)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
