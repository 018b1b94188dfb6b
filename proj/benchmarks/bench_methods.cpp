#include <benchmark/benchmark.h>

#include "apportion/apportion.hpp"

using namespace apportion;

namespace {

VoteTally make_tally(std::int64_t parties) {
  oracle::InstanceSpace s;
  s.min_parties = s.max_parties = static_cast<std::size_t>(parties);
  return oracle::generate_instance(s, parties).tally();
}

void BM_HareNiemeyer(benchmark::State& state) {
  const auto t = make_tally(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hare_niemeyer(t, state.range(1)));
}

void BM_DivisorTable(benchmark::State& state) {
  const auto t = make_tally(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(highest_averages(t, state.range(1), DivisorRule::dhondt, {}, false));
}

void BM_DivisorTableTraced(benchmark::State& state) {
  const auto t = make_tally(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(highest_averages(t, state.range(1), DivisorRule::dhondt, {}, true));
}

void BM_MultiplicativeThreshold(benchmark::State& state) {
  const auto t = make_tally(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(multiplicative(t, state.range(1), RoundingRule::nearest(), {},
                                            MultiplicativeEngine::threshold, false));
}

void BM_MultiplicativeSweep(benchmark::State& state) {
  const auto t = make_tally(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(multiplicative(t, state.range(1), RoundingRule::nearest(), {},
                                            MultiplicativeEngine::sweep, false));
}

void BM_SequentialHare(benchmark::State& state) {
  const auto t = make_tally(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sequential_hare(t, state.range(1)));
}

void BM_EquivalenceSuite(benchmark::State& state) {
  oracle::InstanceSpace s;
  s.trials = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::equivalence_suite(s, {}, {static_cast<unsigned>(state.range(1))}));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (std::int64_t k : {3, 8, 32})
    for (std::int64_t n : {10, 200, 5000}) b->Args({k, n});
}

}  // namespace

BENCHMARK(BM_HareNiemeyer)->Apply(sizes);
BENCHMARK(BM_DivisorTable)->Apply(sizes);
BENCHMARK(BM_DivisorTableTraced)->Args({8, 200});
BENCHMARK(BM_MultiplicativeThreshold)->Apply(sizes);
BENCHMARK(BM_MultiplicativeSweep)->Apply(sizes);
BENCHMARK(BM_SequentialHare)->Apply(sizes);
BENCHMARK(BM_EquivalenceSuite)->Args({1000, 1})->Args({1000, 0})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
