#include <benchmark/benchmark.h>

#include "soficshift/constructions.hpp"
#include "soficshift/covers.hpp"
#include "soficshift/invariants.hpp"
#include "soficshift/language.hpp"

namespace {

using namespace soficshift;

void BM_ClassKeyAll(benchmark::State& state) {
  const auto g = charge_constrained(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_key(g, g.all_vertices()));
}
BENCHMARK(BM_ClassKeyAll)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_KriegerCharge(benchmark::State& state) {
  const auto g = charge_constrained(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krieger_cover(g));
}
BENCHMARK(BM_KriegerCharge)->Arg(2)->Arg(4)->Arg(8);

void BM_KriegerExample(benchmark::State& state) {
  const auto g = fixture("ex52_fischer");
  for (auto _ : state) benchmark::DoNotOptimize(krieger_cover(g));
}
BENCHMARK(BM_KriegerExample);

void BM_Layers(benchmark::State& state) {
  const auto g = fixture("3cc");
  for (auto _ : state) {
    const auto k = krieger_cover(g);
    benchmark::DoNotOptimize(layers(k, generalized_fischer_cover(k)));
  }
}
BENCHMARK(BM_Layers);

void BM_PcgInvariant(benchmark::State& state) {
  const auto g = fixture("ex52_fischer");
  for (auto _ : state) benchmark::DoNotOptimize(pcg_invariant(g));
}
BENCHMARK(BM_PcgInvariant);

}  // namespace

BENCHMARK_MAIN();
