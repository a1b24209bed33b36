/*
   Copyright 2026 The hardyc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hardy/kernels.hpp"
#include "hardy/search.hpp"
#include "hardy/series.hpp"

namespace {

using hardy::AnalyticPoly;
using hardy::Complex;

std::vector<Complex> random_samples(std::size_t n) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<Complex> v(n);
    for (Complex& z : v) z = {g(rng), g(rng)};
    return v;
}

AnalyticPoly random_poly(std::size_t degree) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> a(degree + 1);
    for (Complex& c : a) c = {u(rng), u(rng)};
    return AnalyticPoly(std::move(a));
}

void BM_SumAbsPow(benchmark::State& state) {
    const auto samples = random_samples(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hardy::sum_abs_pow(samples, 0.7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SumAbsPowSerial(benchmark::State& state) {
    const auto samples = random_samples(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hardy::sum_abs_pow_serial(samples, 0.7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HpNorm(benchmark::State& state) {
    const AnalyticPoly f = random_poly(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hardy::hp_norm(f, 0.5).value);
}

void BM_HpNormReference(benchmark::State& state) {
    const AnalyticPoly f = random_poly(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hardy::hp_norm_reference(f, 0.5).value);
}

void run_kappa_search(benchmark::State& state, hardy::Execution execution) {
    hardy::SearchConfig config;
    config.objective = hardy::ObjectiveId::Kappa;
    config.p = 0.8;
    config.degree = 4;
    config.restarts = 8;
    config.max_evals_per_restart = 300;
    config.execution = execution;
    for (auto _ : state) benchmark::DoNotOptimize(hardy::estimate_kappa_empirical(config).constant.value);
}

void BM_SearchParallel(benchmark::State& state) { run_kappa_search(state, hardy::Execution::Parallel); }
void BM_SearchSerial(benchmark::State& state) { run_kappa_search(state, hardy::Execution::Serial); }

}  // namespace

BENCHMARK(BM_SumAbsPow)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_SumAbsPowSerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_HpNorm)->Arg(8)->Arg(64)->Arg(512);
BENCHMARK(BM_HpNormReference)->Arg(8)->Arg(64)->Arg(512);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
