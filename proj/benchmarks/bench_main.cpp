#include <map>

#include <benchmark/benchmark.h>

#include "p2leaf/dualgraph.hpp"
#include "p2leaf/flis_solver.hpp"
#include "p2leaf/leaf_formula.hpp"
#include "p2leaf/structure.hpp"
#include "p2leaf/tiling.hpp"

using namespace p2leaf;

namespace {

const TilePatch& sun(int depth) {
  static std::map<int, TilePatch> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) it = cache.emplace(depth, merge_half_tiles(substitute(seed_patch(VertexConfig::Sun), depth))).first;
  return it->second;
}

const DualGraph& sun_dual(int depth) {
  static std::map<int, DualGraph> cache;
  auto it = cache.find(depth);
  if (it == cache.end()) it = cache.emplace(depth, build_dual(sun(depth))).first;
  return it->second;
}

void BM_Substitute(benchmark::State& state) {
  const Patch seed = seed_patch(VertexConfig::Sun);
  for (auto _ : state) benchmark::DoNotOptimize(substitute(seed, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Substitute)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MergeAndDual(benchmark::State& state) {
  const Patch p = substitute(seed_patch(VertexConfig::Sun), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_dual(merge_half_tiles(p)));
}
BENCHMARK(BM_MergeAndDual)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Solver(benchmark::State& state, BoundKind bound) {
  SearchConfig cfg;
  cfg.n_target = static_cast<int>(state.range(0));
  cfg.bound = bound;
  const DualGraph& g = sun_dual(6);
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = max_leaves_exact(g, cfg).nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK_CAPTURE(BM_Solver, potential, BoundKind::Potential)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solver, handshake, BoundKind::Handshake)->DenseRange(8, 18, 2)->Unit(benchmark::kMicrosecond);

void BM_SolverThreads(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n_target = 14;
  cfg.threads = static_cast<int>(state.range(0));
  const DualGraph& g = sun_dual(6);
  for (auto _ : state) benchmark::DoNotOptimize(max_leaves_exact(g, cfg));
}
BENCHMARK(BM_SolverThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FormulaCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(first_formula_mismatch(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_FormulaCheck)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Poset(benchmark::State& state) {
  const DualGraph& g = sun_dual(6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_3regular(g));
}
BENCHMARK(BM_Poset)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_FlowersAndSkeleton(benchmark::State& state) {
  const TilePatch& tp = sun(8);
  const DualGraph& g = sun_dual(8);
  for (auto _ : state) benchmark::DoNotOptimize(star_skeleton(tp, detect_flowers(tp, g)));
}
BENCHMARK(BM_FlowersAndSkeleton)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Family(benchmark::State& state) {
  const FamilyBuilder& fb = family_builder(250);
  for (auto _ : state) benchmark::DoNotOptimize(fb.build(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Family)->Arg(116)->Arg(250)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
