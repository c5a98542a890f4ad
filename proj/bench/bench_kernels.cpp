/*
 * Copyright 2026 The kscheme Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kscheme/macwilliams.hpp"
#include "kscheme/oracle/code.hpp"
#include "kscheme/oracle/verify.hpp"
#include "kscheme/schemes.hpp"

#include <benchmark/benchmark.h>

using namespace kscheme;
using namespace kscheme::oracle;

namespace {

void BM_WeightDistribution(benchmark::State& state) {
    const AmbientSpace s(make_hamming(2, 18));
    const CodeSpec c = random_code(s, 12, 7);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(s, c));
}

void BM_WeightDistributionSerial(benchmark::State& state) {
    const AmbientSpace s(make_hamming(2, 18));
    const CodeSpec c = random_code(s, 12, 7);
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution_serial(s, c));
}

void BM_CharEigenmatrix(benchmark::State& state) {
    const AmbientSpace s(make_bilinear(2, 3, 3));
    for (auto _ : state) benchmark::DoNotOptimize(char_eigenmatrix(s));
}

void BM_CharEigenmatrixSerial(benchmark::State& state) {
    const AmbientSpace s(make_bilinear(2, 3, 3));
    for (auto _ : state) benchmark::DoNotOptimize(char_eigenmatrix_serial(s));
}

std::vector<TransformInput> batch() {
    std::vector<TransformInput> out;
    const SchemeParams p = make_hamming(2, 10);
    const AmbientSpace s(p);
    for (int i = 0; i < 32; ++i) {
        const CodeSpec c = random_code(s, 5, static_cast<unsigned>(i));
        out.push_back({weight_distribution_serial(s, c), code_size(s, c), p});
    }
    return out;
}

void BM_TransformBatch(benchmark::State& state) {
    const auto in = batch();
    for (auto _ : state) benchmark::DoNotOptimize(transform_batch(in, TransformMethod::Functional));
}

void BM_TransformBatchSerial(benchmark::State& state) {
    const auto in = batch();
    for (auto _ : state) benchmark::DoNotOptimize(transform_batch_serial(in, TransformMethod::Functional));
}

}  // namespace

BENCHMARK(BM_WeightDistribution);
BENCHMARK(BM_WeightDistributionSerial);
BENCHMARK(BM_CharEigenmatrix);
BENCHMARK(BM_CharEigenmatrixSerial);
BENCHMARK(BM_TransformBatch);
BENCHMARK(BM_TransformBatchSerial);

BENCHMARK_MAIN();
