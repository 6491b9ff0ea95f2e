#include <benchmark/benchmark.h>

#include "skolemgen/engine.hpp"
#include "skolemgen/sts.hpp"
#include "skolemgen/succession.hpp"

using namespace skolemgen;

static void BM_CountOpenDepthFirst(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_open_levels(n));
}
BENCHMARK(BM_CountOpenDepthFirst)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_CountOpenLevelCompressed(benchmark::State& state) {
  CountOptions options;
  options.traversal = Traversal::level_compressed;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_open_levels(n, options));
}
BENCHMARK(BM_CountOpenLevelCompressed)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_CountOpenParallel(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parallel_count(14, workers));
}
BENCHMARK(BM_CountOpenParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_EnumerateSkolem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bool prune = state.range(1) != 0;
  std::uint64_t visited = 0;
  for (auto _ : state) {
    const auto report = dfs_enumerate(n, prune, [](const SkolemSequence& w) { benchmark::DoNotOptimize(w); });
    visited = 0;
    for (auto c : report.per_level_counts) visited += c;
  }
  state.counters["nodes"] = static_cast<double>(visited);
}
BENCHMARK(BM_EnumerateSkolem)
    ->Args({5, 0})->Args({5, 1})->Args({8, 0})->Args({8, 1})->Args({9, 1})
    ->Unit(benchmark::kMillisecond);

// The OpenState value API, for comparison with the compact walker.
static void BM_ChildrenValueApi(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<OpenState> level{OpenState{}};
    for (int d = 0; d < depth; ++d) {
      std::vector<OpenState> next;
      for (const auto& s : level)
        for (auto& kid : children(s)) next.push_back(std::move(kid));
      level = std::move(next);
    }
    benchmark::DoNotOptimize(level.size());
  }
}
BENCHMARK(BM_ChildrenValueApi)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_VerifySts(benchmark::State& state) {
  const auto all = enumerate_skolem(9);
  const auto system = sts::develop(sts::base_blocks(all.front()), 9);
  for (auto _ : state) benchmark::DoNotOptimize(sts::verify(system));
}
BENCHMARK(BM_VerifySts);

BENCHMARK_MAIN();
