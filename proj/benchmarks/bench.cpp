#include <benchmark/benchmark.h>

#include "hyperframe/frame.hpp"
#include "hyperframe/nullspace.hpp"
#include "hyperframe/random_hypergraph.hpp"
#include "hyperframe/signal.hpp"
#include "hyperframe/sweep.hpp"

using namespace hyperframe;

namespace {

// Average degree 2.6 on three vertices per edge, about where frames stop
// shrinking.
Hypergraph instance(std::int64_t n) {
  const auto v = static_cast<std::size_t>(n);
  return random_hypergraph(v, (v * 26 + 15) / 30, 3, 17);
}

void BM_Constraints(benchmark::State& state) {
  const Hypergraph h = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_constraints(h, LinearMap::universal(3)));
}
BENCHMARK(BM_Constraints)->RangeMultiplier(2)->Range(25, 200);

void BM_Nullspace(benchmark::State& state) {
  const SparseMatrix m = assemble_constraints(instance(state.range(0)), LinearMap::universal(3));
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
  state.counters["rows"] = static_cast<double>(m.rows());
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(2)->Range(25, 200);

void BM_SignalSpace(benchmark::State& state) {
  const Hypergraph h = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signal_space(h, LinearMap::universal(3)));
}
BENCHMARK(BM_SignalSpace)->RangeMultiplier(2)->Range(25, 200);

void BM_Frame(benchmark::State& state) {
  const Hypergraph h = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(frame(h));
}
BENCHMARK(BM_Frame)->RangeMultiplier(2)->Range(25, 200);

void BM_GenerateAndReduce(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Hypergraph h = random_hypergraph(50, 43, 3, seed++);
    benchmark::DoNotOptimize(reduction_proportion(h));
  }
}
BENCHMARK(BM_GenerateAndReduce);

}  // namespace
BENCHMARK_MAIN();
