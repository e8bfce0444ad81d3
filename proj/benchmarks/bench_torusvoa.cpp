#include <benchmark/benchmark.h>

#include "torusvoa/torusvoa.hpp"

using namespace torusvoa;

static void BM_KostkaRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Composition mu(std::vector<int>(4, n));
  for (auto _ : state) benchmark::DoNotOptimize(kostka_by_shape(mu, 4));
}
BENCHMARK(BM_KostkaRow)->Arg(5)->Arg(10)->Arg(20);

static void BM_PrincipalSpec(benchmark::State& state) {
  const Partition lambda({12, 9, 5, 2});
  for (auto _ : state) benchmark::DoNotOptimize(principal_spec(lambda, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PrincipalSpec)->Arg(4)->Arg(6);

static void BM_JonesTorusLink(benchmark::State& state) {
  EvaluationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  const TorusLinkSpec spec{3, 3, 2, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(jones_torus_link(spec, opts));
}
BENCHMARK(BM_JonesTorusLink)->Args({6, 1})->Args({12, 1})->Args({12, 4});

static void BM_SingletCharacter(benchmark::State& state) {
  const CharacterSpec spec{static_cast<int>(state.range(0)), 2, CharacterKind::singlet, 0,
                           static_cast<std::int64_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(singlet_char(spec));
}
BENCHMARK(BM_SingletCharacter)->Args({2, 40})->Args({3, 25});

static void BM_TripletCharacter(benchmark::State& state) {
  const CharacterSpec spec{3, 2, CharacterKind::triplet, 1, static_cast<std::int64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(triplet_char(spec));
}
BENCHMARK(BM_TripletCharacter)->Arg(15)->Arg(25);

static void BM_InverseEuler(benchmark::State& state) {
  const Rational cutoff(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qs_invert_unit(euler_product(cutoff), cutoff));
}
BENCHMARK(BM_InverseEuler)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
