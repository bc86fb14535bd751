// Copyright 2026 The maxent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "maxent/batch.hpp"
#include "maxent/reference.hpp"
#include "maxent/search.hpp"

using namespace maxent;

namespace {

std::vector<StateVector> corpus(std::size_t count) {
    Rng rng(5);
    std::vector<StateVector> states;
    states.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        states.push_back(haar_random_state(2 + k % 4, rng));
    }
    return states;
}

void BM_Sample(benchmark::State &st) {
    const auto s = haar_random_state(4, 1);
    const std::vector<PauliAxis> bases(4, PauliAxis::x);
    for (auto _ : st) {
        benchmark::DoNotOptimize(sample_outcomes(s, bases, st.range(0), 7));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SampleReference(benchmark::State &st) {
    const auto s = haar_random_state(4, 1);
    const std::vector<PauliAxis> bases(4, PauliAxis::x);
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::sample_outcomes(s, bases, st.range(0), 7));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_MultiStart(benchmark::State &st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(multi_start(st.range(0), 64, 1e-12, 3));
    }
}

void BM_MultiStartReference(benchmark::State &st) {
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::multi_start(st.range(0), 64, 1e-12, 3));
    }
}

void BM_CertifyBatch(benchmark::State &st) {
    const auto states = corpus(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(certify_batch(states));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CertifyBatchReference(benchmark::State &st) {
    const auto states = corpus(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::certify_batch(states));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CostBatch(benchmark::State &st) {
    const auto states = corpus(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(cost_batch(states));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_CostBatchReference(benchmark::State &st) {
    const auto states = corpus(st.range(0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(reference::cost_batch(states));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

} // namespace

BENCHMARK(BM_Sample)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleReference)->Arg(1 << 20)->Arg(1 << 23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiStart)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiStartReference)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyBatch)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyBatchReference)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CostBatch)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CostBatchReference)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
