#include <benchmark/benchmark.h>

#include <vector>

#include <phorma/hash.hpp>
#include <phorma/oracle.hpp>
#include <phorma/splitmix64.hpp>

namespace {

const char* kLWhere =
    "a1>=a3 & a2>=a4 & a1>=a2 & (a1!=a2 | a3>=a4) & (a1!=a3 | a2=a4) & (a2!=a4 | a1=a3)";

phorma::PhormaSpec l_spec(int scale) {
  return phorma::make_spec({scale + 2, scale, scale + 2, scale}, kLWhere);
}

void BM_Build(benchmark::State& state) {
  const auto spec = l_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phorma::build(spec));
  }
}
BENCHMARK(BM_Build)->Arg(5)->Arg(20)->Arg(100);

void BM_EnumeratePatterns(benchmark::State& state) {
  const auto spec = phorma::make_spec(std::vector<int>(static_cast<std::size_t>(state.range(0)),
                                                       6),
                                      "a1>=a2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(phorma::enumerate_patterns(spec));
  }
}
BENCHMARK(BM_EnumeratePatterns)->Arg(4)->Arg(6);

void BM_Rank(benchmark::State& state) {
  const auto graph = phorma::build(l_spec(static_cast<int>(state.range(0))));
  std::vector<std::vector<int>> members;
  for (phorma::Rank r = 0; r < phorma::count(graph); r += 7) {
    members.push_back(phorma::unrank(graph, r));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phorma::rank(graph, members[i]));
    i = (i + 1) % members.size();
  }
}
BENCHMARK(BM_Rank)->Arg(5)->Arg(100);

void BM_Unrank(benchmark::State& state) {
  const auto graph = phorma::build(l_spec(static_cast<int>(state.range(0))));
  phorma::Rank r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phorma::unrank(graph, r));
    r = (r + 13) % phorma::count(graph);
  }
}
BENCHMARK(BM_Unrank)->Arg(5)->Arg(100);

void BM_Sample(benchmark::State& state) {
  const auto graph = phorma::build(l_spec(20));
  phorma::SplitMix64 rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phorma::sample(graph, rng.next_unit()));
  }
}
BENCHMARK(BM_Sample);

void BM_BoxOracle(benchmark::State& state) {
  const auto spec = l_spec(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phorma::oracle::enumerate_members(spec));
  }
}
BENCHMARK(BM_BoxOracle);

}  // namespace

BENCHMARK_MAIN();
