#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "rdc/rdc.hpp"

namespace {

using namespace rdc;

// Pasting of n globes along their 0-boundaries.
OgPoset globe_row(int n) {
  const auto a = atom(point(), point());
  const auto globe = atom(a, a);
  auto m = globe;
  for (int i = 1; i < n; ++i) m = paste(m, globe, 0);
  return m.shape;
}

void BM_RecognizeRow(benchmark::State& state) {
  const auto p = globe_row(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Recognizer rec(p);
    benchmark::DoNotOptimize(rec.recognize_all());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RecognizeRow)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_RecognizeAtom(benchmark::State& state) {
  const auto p = fixtures::non_acyclic_atom();
  for (auto _ : state) benchmark::DoNotOptimize(is_molecule(p));
}
BENCHMARK(BM_RecognizeAtom);

void BM_FlowGraph(benchmark::State& state) {
  const auto u = fixtures::dw_acyclic_not_gray_stable_atom();
  const auto g = gray(u, u);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flow_graph(g, k));
}
BENCHMARK(BM_FlowGraph)->DenseRange(0, 3);

void BM_ExtendedFlowGraph(benchmark::State& state) {
  const auto u = fixtures::non_acyclic_atom();
  for (auto _ : state)
    for (int k = 0; k < 3; ++k) benchmark::DoNotOptimize(extended_flow_graph(u, k));
}
BENCHMARK(BM_ExtendedFlowGraph);

void BM_GrayProduct(benchmark::State& state) {
  const auto p = globe_row(static_cast<int>(state.range(0)));
  const auto q = fixtures::two_path();
  for (auto _ : state) benchmark::DoNotOptimize(gray(p, q));
}
BENCHMARK(BM_GrayProduct)->RangeMultiplier(2)->Range(1, 8);

void BM_Classify(benchmark::State& state) {
  const auto u = fixtures::non_acyclic_atom();
  for (auto _ : state) benchmark::DoNotOptimize(classify(u));
}
BENCHMARK(BM_Classify);

}  // namespace
BENCHMARK_MAIN();
