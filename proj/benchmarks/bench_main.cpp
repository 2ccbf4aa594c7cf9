#include <benchmark/benchmark.h>

#include <random>

#include "epi/enumeration.hpp"
#include "epi/formula.hpp"
#include "epi/operator.hpp"

namespace {

epi::SpacePtr bench_space(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return epi::StateSpace::make(labels);
}

void BM_EnumerateTmOperators(benchmark::State& state) {
  auto space = bench_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t count = 0;
    epi::enumerate_tm_operators(
        space, [&](const epi::KnowledgeOperator&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTmOperators)->Arg(2)->Arg(3)->Arg(4);

void BM_Theorem3UniversalCheck(benchmark::State& state) {
  auto space = bench_space(static_cast<std::size_t>(state.range(0)));
  epi::AxiomSet tm;
  tm.truth = tm.monotonicity = true;
  for (auto _ : state) {
    auto stats = epi::universal_check(space, epi::Claim::Theorem3, tm);
    benchmark::DoNotOptimize(stats.pass);
  }
}
BENCHMARK(BM_Theorem3UniversalCheck)->Arg(3)->Arg(4);

void BM_MonotonicityCoveringPairs(benchmark::State& state) {
  auto space = bench_space(static_cast<std::size_t>(state.range(0)));
  auto k = epi::sample_tm_operator(space, 99);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        epi::is_monotone(k.table(), space->size()));
}
BENCHMARK(BM_MonotonicityCoveringPairs)->Arg(8)->Arg(12);

void BM_ParseFormula(benchmark::State& state) {
  const std::string text = "K ~ K Omega | (K E & ~F \\ E) | K1 ~ K0 Omega";
  for (auto _ : state) benchmark::DoNotOptimize(epi::parse_expr(text));
}
BENCHMARK(BM_ParseFormula);

}  // namespace

BENCHMARK_MAIN();
