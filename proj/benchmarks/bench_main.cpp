// Copyright (c) 2026 The poisperm authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "poisperm/glm.hpp"
#include "poisperm/permtest.hpp"
#include "poisperm/samplers.hpp"
#include "poisperm/scenarios.hpp"

using namespace poisperm;

namespace {

Dataset make_data(std::size_t n) {
  return gen_null(ScenarioSpec::null_poisson(0.3), n,
                  SeedPath{7, 0, 0, 0, -1});
}

void BM_FitPoisson(benchmark::State& state) {
  const auto data = make_data(static_cast<std::size_t>(state.range(0)));
  const auto X = DesignMatrix::with_predictor(data.x1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_poisson(X, data.y));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitPoisson)->Arg(100)->Arg(1000)->Arg(10000);

void BM_PermutationPvalue(benchmark::State& state) {
  const auto data = make_data(200);
  const SeedPath seed{11, 0, 0, 0, -1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        permutation_pvalue(data, static_cast<int>(state.range(0)), seed));
  }
}
BENCHMARK(BM_PermutationPvalue)->Arg(100)->Arg(500);

void BM_SampleNormal(benchmark::State& state) {
  const SeedPath seed{13, 0, 0, 0, -1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_normal(seed, static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleNormal)->Arg(100000);

void BM_SamplePoisson(benchmark::State& state) {
  const SeedPath seed{17, 0, 0, 0, -1};
  const std::vector<double> rates(100000,
                                  static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_poisson(seed, rates));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SamplePoisson)->Arg(5)->Arg(50);

void BM_SampleF(benchmark::State& state) {
  const SeedPath seed{19, 0, 0, 0, -1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_f(seed, FParams{8, 8}, 100000));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SampleF);

void BM_Shuffle(benchmark::State& state) {
  const auto data = make_data(10000);
  const SeedPath seed{23, 0, 0, 0, -1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(shuffle(data.x1, seed));
  }
}
BENCHMARK(BM_Shuffle);

}  // namespace

BENCHMARK_MAIN();
