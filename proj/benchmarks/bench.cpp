#include <random>

#include <benchmark/benchmark.h>

#include "hng/canon.hpp"
#include "hng/enumeration.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/miner.hpp"
#include "hng/sampling.hpp"
#include "hng/structure.hpp"

using namespace hng;

namespace {

std::vector<Graph> sample(int n, int count, std::uint64_t seed) {
  GraphSampler s(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(s.gnp(n, 0.5));
  return out;
}

const ObstructionSet& obstructions() {
  static const ObstructionSet f = derive_F(8);
  return f;
}

void BM_CanonicalCode(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 64, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_EnumerateOrder(benchmark::State& state) {
  const auto parents = enumerate_order(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(extend_catalog(parents));
}
BENCHMARK(BM_EnumerateOrder)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ChromaticNumber(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 32, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ChromaticNumber)->Arg(12)->Arg(20)->Arg(28);

void BM_CliqueNumber(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 32, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(32);

void BM_IsPerfect(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 16, 7);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfect(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_IsPerfect)->Arg(12)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMicrosecond);

// Perfect inputs force the odd-hole search to exhaust every chordless path.
void BM_IsPerfectBipartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GraphSampler s(8);
  std::vector<Graph> graphs;
  for (int k = 0; k < 16; ++k) {
    Graph g(n);
    for (int u = 0; u < n / 2; ++u) {
      for (int v = n / 2; v < n; ++v) {
        if (s.coin(0.3)) g.add_edge(u, v);
      }
    }
    graphs.push_back(g);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_perfect(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_IsPerfectBipartite)->Arg(12)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_HereditaryDefect(benchmark::State& state) {
  const auto graphs = sample(static_cast<int>(state.range(0)), 8, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hereditary_ng_defect(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_HereditaryDefect)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_In1HngBruteForce(benchmark::State& state) {
  GraphSampler s(5);
  std::vector<Graph> graphs;
  for (int i = 0; i < 32; ++i) graphs.push_back(s.random_family_instance(static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(in_hng(graphs[i++ % graphs.size()], 1));
}
BENCHMARK(BM_In1HngBruteForce)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_In1HngFast(benchmark::State& state) {
  const ObstructionSet& f = obstructions();
  GraphSampler s(5);
  std::vector<Graph> graphs;
  for (int i = 0; i < 32; ++i) graphs.push_back(s.random_family_instance(static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_1hng_fast(graphs[i++ % graphs.size()], f));
}
BENCHMARK(BM_In1HngFast)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_ChromaticNumberFast(benchmark::State& state) {
  const ObstructionSet& f = obstructions();
  GraphSampler s(6);
  std::vector<Graph> graphs;
  for (int i = 0; i < 32; ++i) graphs.push_back(s.random_family_instance(static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number_fast(graphs[i++ % graphs.size()], f));
}
BENCHMARK(BM_ChromaticNumberFast)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_MineObstructions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_F(8));
}
BENCHMARK(BM_MineObstructions)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
