#include <benchmark/benchmark.h>

#include "bnchain/discrete_oracle.hpp"
#include "bnchain/effective_series.hpp"

using namespace bnchain;

namespace {

ChainGeometry integer_chain(int g) {
  std::vector<LoopLengths> loops;
  for (int k = 0; k < g; ++k) loops.push_back({Rational(2 * g + k), Rational(1 + k % 3)});
  return ChainGeometry(std::move(loops));
}

}  // namespace

static void BM_EnumerateTableaux(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const BNParams p{g, g - 2 + 1, 1};
  for (auto _ : state) {
    std::uint64_t n = 0;
    for_each_tableau(p, [&](const Tableau&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateTableaux)->DenseRange(4, 12, 4);

static void BM_SeriesPipeline(benchmark::State& state) {
  const auto all = enumerate_tableaux({8, 8, 2});
  for (auto _ : state) {
    for (const Tableau& t : all) benchmark::DoNotOptimize(eh_to_effective(eh_series_from_tableau(t)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_SeriesPipeline);

static void BM_DharReduce(benchmark::State& state) {
  const ChainGeometry geom = integer_chain(static_cast<int>(state.range(0)));
  const DiscreteGraph gph = subdivide_chain(geom);
  ChipConfig D{std::vector<std::int64_t>(gph.vertex_count(), 0)};
  D.chips[gph.vertex_count() - 1] = 7;
  D.chips[gph.vertex_count() / 2] = -3;
  for (auto _ : state) benchmark::DoNotOptimize(dhar_reduce(gph, D, gph.node_vertex(0)));
  state.counters["vertices"] = gph.vertex_count();
}
BENCHMARK(BM_DharReduce)->Arg(2)->Arg(4)->Arg(6);

static void BM_RankAtLeast(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int g = 6;
  const BNParams p{g, g - 1 + r, r};
  const ChainGeometry geom = integer_chain(g);
  const TropicalDivisor D = divisor_from_tableau(enumerate_tableaux(p).front(), geom);
  for (auto _ : state) benchmark::DoNotOptimize(rank_at_least(geom, D, r));
}
BENCHMARK(BM_RankAtLeast)->DenseRange(0, 3);

static void BM_GraphRank(benchmark::State& state) {
  const ChainGeometry geom = integer_chain(static_cast<int>(state.range(0)));
  const BNParams p{geom.g(), geom.g() - 1 + 1, 1};
  const TropicalDivisor D = divisor_from_tableau(enumerate_tableaux(p).front(), geom);
  const DiscreteGraph gph = subdivide_for(geom, D);
  const ChipConfig chips = to_chips(gph, D);
  for (auto _ : state) benchmark::DoNotOptimize(baker_norine_rank(gph, chips));
  state.counters["vertices"] = gph.vertex_count();
}
BENCHMARK(BM_GraphRank)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
