#include <benchmark/benchmark.h>

#include "scarflab/analysis.hpp"
#include "scarflab/enumerate.hpp"

using namespace scarflab;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = enumerate_connected_graphs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Graph& g : graphs) benchmark::DoNotOptimize(canonical_form(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 7);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_graphs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_ScarfComplexPath(benchmark::State& state) {
  const auto ideal = build_ideal(make_family(FamilyTag::path(static_cast<int>(state.range(0)))), IdealSpec::connected(3));
  for (auto _ : state) benchmark::DoNotOptimize(scarf_complex(ideal));
}
BENCHMARK(BM_ScarfComplexPath)->DenseRange(8, 16, 4);

void BM_IsScarfSpider(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ideal = build_ideal(make_family(FamilyTag::spider5(1, n, 1)), IdealSpec::path(4));
  const auto fields = default_field_battery();
  for (auto _ : state) benchmark::DoNotOptimize(is_scarf(ideal, fields));
}
BENCHMARK(BM_IsScarfSpider)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_RationalRank(benchmark::State& state) {
  const auto ideal = build_ideal(make_family(FamilyTag::path(7)), IdealSpec::connected(3));
  const auto taylor = taylor_complex(ideal).complex();
  const auto d2 = boundary_matrix(taylor, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_rational(d2));
}
BENCHMARK(BM_RationalRank);

void BM_SweepPathFour(benchmark::State& state) {
  const auto fields = default_field_battery();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(IdealSpec::path(4), static_cast<int>(state.range(0)), fields));
}
BENCHMARK(BM_SweepPathFour)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
