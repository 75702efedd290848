#include <benchmark/benchmark.h>

#include "mcs/consistency.hpp"
#include "mcs/exact_solver.hpp"
#include "mcs/random_instances.hpp"
#include "mcs/tree_solver.hpp"

namespace {

mcs::ColoredGraph tree_for(benchmark::State& state) {
  mcs::SplitMix64 rng(static_cast<std::uint64_t>(state.range(0) * 131 + state.range(1)));
  return mcs::random_tree(static_cast<std::uint32_t>(state.range(0)),
                          static_cast<mcs::Color>(state.range(1)), rng);
}

void BM_TreeDp(benchmark::State& state) {
  const mcs::ColoredGraph g = tree_for(state);
  std::size_t entries = 0;
  for (auto _ : state) {
    mcs::TreeMcsSolver solver(g);
    benchmark::DoNotOptimize(solver.solve());
    entries = solver.memo_entries();
  }
  state.counters["memo_entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_TreeDp)
    ->ArgsProduct({{10, 25, 50, 100}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_TreeDpRawKeys(benchmark::State& state) {
  const mcs::ColoredGraph g = tree_for(state);
  for (auto _ : state) {
    mcs::TreeMcsSolver solver(g, {.normalize_keys = false});
    benchmark::DoNotOptimize(solver.solve());
  }
}
BENCHMARK(BM_TreeDpRawKeys)->ArgsProduct({{10, 20}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_BruteForceMcs(benchmark::State& state) {
  const mcs::ColoredGraph g = tree_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(mcs::brute_force_mcs(g));
}
BENCHMARK(BM_BruteForceMcs)->ArgsProduct({{8, 12, 16}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_ConsistencyCheck(benchmark::State& state) {
  const mcs::ColoredGraph g = tree_for(state);
  const auto witness = mcs::solve_tree_mcs(g).witness;
  for (auto _ : state) benchmark::DoNotOptimize(mcs::is_consistent(g, witness));
}
BENCHMARK(BM_ConsistencyCheck)->ArgsProduct({{100, 1000}, {3}});

}  // namespace

BENCHMARK_MAIN();
