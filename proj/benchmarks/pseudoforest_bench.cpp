#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "dpf/naive_graph.hpp"
#include "dpf/pseudoforest.hpp"
#include "dpf/rng.hpp"

namespace {

dpf::NodeId random_node(dpf::SplitMix64& rng, std::size_t n) {
  return dpf::NodeId(static_cast<std::uint32_t>(rng.below(n)));
}

// Random functional graph reached by n random updates from all self-loops.
dpf::Pseudoforest scrambled(std::size_t n, dpf::SplitMix64& rng) {
  dpf::Pseudoforest pf(n);
  for (std::size_t i = 0; i < n; ++i) pf.update(random_node(rng, n), random_node(rng, n));
  return pf;
}

void BM_Update(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dpf::SplitMix64 rng(42);
  auto pf = scrambled(n, rng);
  const std::uint64_t rot = pf.rotations();
  for (auto _ : state) pf.update(random_node(rng, n), random_node(rng, n));
  state.counters["rotations/op"] = benchmark::Counter(
      static_cast<double>(pf.rotations() - rot), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_Update)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_Query(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dpf::SplitMix64 rng(7);
  auto pf = scrambled(n, rng);
  const std::uint64_t rot = pf.rotations();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pf.query(random_node(rng, n), rng.next()));
  }
  state.counters["rotations/op"] = benchmark::Counter(
      static_cast<double>(pf.rotations() - rot), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_Query)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_CycleProximity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dpf::SplitMix64 rng(11);
  auto pf = scrambled(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pf.cycle_proximity(random_node(rng, n)));
}
BENCHMARK(BM_CycleProximity)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

// Walking baseline: O(k) per query, shown for contrast at small k.
void BM_NaiveQuery(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dpf::SplitMix64 rng(7);
  dpf::NaiveGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.update(random_node(rng, n), random_node(rng, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.walk(random_node(rng, n), n));
  }
}
BENCHMARK(BM_NaiveQuery)->RangeMultiplier(16)->Range(1 << 8, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
