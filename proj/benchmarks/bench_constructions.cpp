#include <benchmark/benchmark.h>

#include "soficshift/constructions.hpp"
#include "soficshift/invariants.hpp"

namespace {

using namespace soficshift;

RootedDag chain(std::size_t n) {
  std::string text = "root v0\n";
  for (std::size_t i = 1; i < n; ++i) {
    text += "arc v" + std::to_string(i - 1) + " v" + std::to_string(i) + "\n";
  }
  return parse_dag(text);
}

void BM_RealizePcg(benchmark::State& state) {
  const auto dag = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(realize_pcg(dag));
}
BENCHMARK(BM_RealizePcg)->Arg(2)->Arg(4)->Arg(6);

void BM_RealizeIdealLattice(benchmark::State& state) {
  const auto dag = example_dag();
  for (auto _ : state) benchmark::DoNotOptimize(realize_ideal_lattice(dag));
}
BENCHMARK(BM_RealizeIdealLattice);

void BM_IdealLattice(benchmark::State& state) {
  const auto g = charge_constrained(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hereditary_saturated_subsets(g));
}
BENCHMARK(BM_IdealLattice)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
