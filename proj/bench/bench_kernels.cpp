// Serial reference kernels against their OpenMP versions. The second
// benchmark argument selects the mode: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "hw/brambles.hpp"
#include "hw/covers.hpp"
#include "hw/decomp.hpp"
#include "hw/gen.hpp"

using namespace hw;

namespace {

Exec mode(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(1) ? "parallel" : "serial"); }

// Incidence graph of a seeded hypergraph with n vertices.
Graph incidence_of(int n) {
  return incidence_graph(random_hypergraph(n, n / 2 + 1, 3, 7)).graph();
}

void BM_TreewidthDp(benchmark::State& state) {
  const Graph g = incidence_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g, {24, 9}, mode(state)).width);
  state.counters["vertices"] = g.num_vertices();
  set_label(state);
}

void BM_CoverCostTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Hypergraph h = random_hypergraph(n, n, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(subset_cover_costs(h, CoverKind::fractional, mode(state)));
  set_label(state);
}

void BM_FractionalWidth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Hypergraph h = random_hypergraph(n, n, 3, 13);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        exact_fwidth(h, CoverKind::fractional, {16, 12}, FwidthMethod::subset_dp, mode(state)).width);
  set_label(state);
}

void BM_GridTransversal(benchmark::State& state) {
  GridSpec spec;
  spec.k = static_cast<int>(state.range(0));
  const Bramble b = grid_bramble(spec);
  const ILabeledGraph& host = std::get<ILabeledGraph>(b.host);
  const CoverSystem sys = CoverSystem::of(host);
  for (auto _ : state)
    benchmark::DoNotOptimize(transversal_cover(sys, b.sets, {50'000'000, mode(state)}).cover.cost);
  set_label(state);
}

}  // namespace

BENCHMARK(BM_TreewidthDp)->ArgsProduct({{10, 12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverCostTable)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FractionalWidth)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridTransversal)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
