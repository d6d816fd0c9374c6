#include <benchmark/benchmark.h>

#include <random>

#include "knotgrp/invariants.hpp"
#include "knotgrp/presentation.hpp"
#include "knotgrp/torus.hpp"
#include "knotgrp/wirtinger.hpp"

using namespace knotgrp;

namespace {

Word random_torus_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<Exponent> exp(-9, 9);
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < len; ++i) raw.push_back({static_cast<GenId>(i % 2), exp(rng)});
  return Word::reduce(raw);
}

void BM_HomCountTrefoilS4(benchmark::State& state) {
  auto p = wirtinger_presentation(builtin_diagram("trefoil"));
  auto s4 = builtin_table("S4");
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(p, s4));
}
BENCHMARK(BM_HomCountTrefoilS4);

void BM_HomCountFiveCrossingS4(benchmark::State& state) {
  auto p = wirtinger_presentation(builtin_diagram("paper-5crossing"));
  auto s4 = builtin_table("S4");
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(p, s4));
}
BENCHMARK(BM_HomCountFiveCrossingS4);

void BM_TorusNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  TorusParams p(3, 5);
  Word w = random_torus_word(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(torus_normal_form(p, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TorusNormalForm)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-20, 20);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(4, 16, 4);

void BM_AutoSimplifyFiveCrossing(benchmark::State& state) {
  auto p = wirtinger_presentation(builtin_diagram("paper-5crossing"));
  for (auto _ : state) benchmark::DoNotOptimize(auto_simplify(p));
}
BENCHMARK(BM_AutoSimplifyFiveCrossing);

}  // namespace

BENCHMARK_MAIN();
