/*
 * Copyright 2026 The lms Authors
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

#include <benchmark/benchmark.h>

#include "lms/chains.hpp"
#include "lms/core.hpp"
#include "lms/models.hpp"
#include "lms/timefn.hpp"

namespace {

void BM_Causality(benchmark::State& state) {
  const auto s = lms::from_link_weights(static_cast<std::size_t>(state.range(0)), 1, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::causality(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Causality)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CausalProperties(benchmark::State& state) {
  const auto s = lms::from_link_weights(static_cast<std::size_t>(state.range(0)), 2, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::check_causal_properties(s));
  }
}
BENCHMARK(BM_CausalProperties)->RangeMultiplier(2)->Range(16, 128);

void BM_Dcheck(benchmark::State& state) {
  const auto s = lms::sample_diamond(2, static_cast<std::size_t>(state.range(0)),
                                     lms::SampleMode::grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::dcheck(s.space));
  }
  state.counters["points"] = static_cast<double>(s.space.size());
}
BENCHMARK(BM_Dcheck)->DenseRange(5, 17, 4);

void BM_TimeFunction(benchmark::State& state) {
  const auto s = lms::sample_diamond(3, static_cast<std::size_t>(state.range(0)),
                                     lms::SampleMode::poisson, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::time_function(s.space));
  }
}
BENCHMARK(BM_TimeFunction)->RangeMultiplier(2)->Range(64, 512);

}  // namespace
