#include "bollobas/certificate.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/events.hpp"
#include "bollobas/exact.hpp"
#include "bollobas/exterior.hpp"
#include "bollobas/rng.hpp"
#include "bollobas/search.hpp"

#include <benchmark/benchmark.h>

using namespace bollobas;

static void BM_IsBollobasExample2(benchmark::State& state) {
  const auto f = example2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_bollobas(f).holds);
  state.counters["tuples"] = static_cast<double>(f.size());
}
BENCHMARK(BM_IsBollobasExample2)->DenseRange(4, 8, 2);

static void BM_BollobasSumExample2(benchmark::State& state) {
  const auto f = example2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bollobas_sum(f));
}
BENCHMARK(BM_BollobasSumExample2)->DenseRange(4, 8, 2);

static void BM_Wedge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  Rng rng(1);
  std::vector<RationalVector> rows(static_cast<std::size_t>(k));
  for (auto& r : rows)
    for (int c = 0; c < n; ++c) r.emplace_back(static_cast<int>(rng.between(-3, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(wedge(rows, n).coords().size());
}
BENCHMARK(BM_Wedge)->DenseRange(4, 10, 2);

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(static_cast<int>(rng.between(-9, 9)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 32);

static void BM_MaxSkewUniform(benchmark::State& state) {
  SearchOptions opts;
  opts.stop_at_bound = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_skew_uniform(GroundSet(5), TupleType({1, 1, 1}), opts).max_size);
}
BENCHMARK(BM_MaxSkewUniform)->Unit(benchmark::kMillisecond);

static void BM_MaxBollobasUniform(benchmark::State& state) {
  SearchOptions opts;
  opts.stop_at_bound = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_bollobas_uniform(GroundSet(5), TupleType({2, 1}), opts).max_size);
}
BENCHMARK(BM_MaxBollobasUniform)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloD3(benchmark::State& state) {
  const auto f = example2(6);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo(f, EventMode::d3, 1 << 16, 7, threads).hits.size());
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_MonteCarloD3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const auto s = lift_to_spaces(example1(TupleType({2, 2})), 6);
  for (auto _ : state) benchmark::DoNotOptimize(certify(s, 42).pass);
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
