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

#include "lms/models.hpp"
#include "lms/parallel.hpp"
#include "lms/quasimetric.hpp"

namespace {

void BM_QuasiMetrics(benchmark::State& state) {
  const auto sample = lms::sample_diamond(2, static_cast<std::size_t>(state.range(0)),
                                          lms::SampleMode::grid);
  const lms::SequencedSpace s(sample.space, lms::diamond_corners(sample), true);
  lms::set_max_threads(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::quasi_metrics(s));
  }
  lms::set_max_threads(1);
}
BENCHMARK(BM_QuasiMetrics)->ArgsProduct({{5, 9, 13}, {1, 4}});

void BM_HalfLineQuasiMetrics(benchmark::State& state) {
  std::vector<double> points;
  for (int j = 1; j <= state.range(0); ++j) {
    points.push_back(0.5 * j);
  }
  const auto line = lms::halfline_space(points, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::quasi_metrics(line.space));
  }
}
BENCHMARK(BM_HalfLineQuasiMetrics)->Arg(25)->Arg(50)->Arg(100);

}  // namespace
