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

#include "lms/gh.hpp"
#include "lms/models.hpp"

namespace {

void BM_DistortionNearestPairing(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto coarse = lms::sample_diamond(2, n, lms::SampleMode::grid);
  const auto fine = lms::sample_diamond(2, 2 * n - 1, lms::SampleMode::grid);
  const auto pairs = lms::nearest_pairing(coarse, fine);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::distortion(coarse.space, fine.space, pairs));
  }
  state.counters["pairs"] = static_cast<double>(pairs.size());
}
BENCHMARK(BM_DistortionNearestPairing)->DenseRange(5, 17, 4);

lms::SequencedSpace relabeled(const lms::DiamondSample& sample, std::uint64_t seed) {
  lms::SplitMix64 rng(seed);
  const std::size_t n = sample.space.size();
  std::vector<lms::PointIndex> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = i;
  }
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  std::vector<lms::PointIndex> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse[perm[i]] = i;
  }
  std::vector<lms::PointIndex> seq;
  for (lms::PointIndex c : lms::diamond_corners(sample)) {
    seq.push_back(inverse[c]);
  }
  return lms::SequencedSpace(sample.space.restricted_to(perm), seq, true);
}

void BM_SearchPlantedRelabeling(benchmark::State& state) {
  const auto sample = lms::sample_diamond(2, static_cast<std::size_t>(state.range(0)),
                                          lms::SampleMode::poisson, 3);
  const auto a = relabeled(sample, 1);
  const auto b = relabeled(sample, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::search_qc(a, b, a.length(), 0.05));
  }
}
BENCHMARK(BM_SearchPlantedRelabeling)->Arg(10)->Arg(20)->Arg(40);

void BM_SearchExactInfeasible(benchmark::State& state) {
  const auto a = lms::sample_diamond(2, 3, lms::SampleMode::grid);
  const auto b = lms::sample_diamond(2, 9, lms::SampleMode::poisson, 5);
  const lms::SequencedSpace x(a.space, lms::diamond_corners(a), true);
  const lms::SequencedSpace y(b.space, {0, 1, 2, 3}, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lms::search_qc(x, y, 4, 0.05));
  }
}
BENCHMARK(BM_SearchExactInfeasible);

}  // namespace
