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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "lms/core.hpp"
#include "lms/gh.hpp"
#include "lms/models.hpp"
#include "oracles.hpp"

namespace lms {
namespace {

using testing::c3;

SequencedSpace diamond_seq(std::size_t n) {
  const auto sample = sample_diamond(2, n, SampleMode::grid);
  return SequencedSpace(sample.space, diamond_corners(sample), true);
}

TEST(Search, IdentityIsFoundWithZeroDistortion) {
  const SequencedSpace x(c3(), {0, 2}, true);
  const auto r = search_qc(x, x, 2, 0.1);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.method, "exact");
  EXPECT_EQ(distortion(x.space(), x.space(), r.best->pairs), 0.0);
  EXPECT_TRUE(verify_qc(x, x, *r.best).ok());
}

TEST(Search, RecoversPlantedRelabelingOfADiamond) {
  const auto x = diamond_seq(4);
  ASSERT_LE(x.space().size(), 20u);
  SplitMix64 rng(3);
  const auto perm = testing::random_permutation(x.space().size(), rng);
  std::vector<PointIndex> inverse(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    inverse[perm[k]] = k;
  }
  std::vector<PointIndex> seq;
  for (PointIndex p : x.seq()) {
    seq.push_back(inverse[p]);
  }
  const SequencedSpace y(testing::permuted(x.space(), perm), seq, true);
  const auto r = search_qc(x, y, x.length(), 0.05);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(distortion(x.space(), y.space(), r.best->pairs), 0.0);
  EXPECT_TRUE(verify_qc(x, y, *r.best).ok());
}

TEST(Search, MismatchedChainsAreCertifiedInfeasible) {
  const SequencedSpace x(c3(), {0, 1, 2}, true);
  const SequencedSpace y(c3(2.0), {0, 1, 2}, true);
  const auto r = search_qc(x, y, 3, 0.4);
  EXPECT_EQ(r.status, SearchStatus::certified_infeasible);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_FALSE(r.best.has_value());
  EXPECT_EQ(search_qc(x, y, 3, 0.6).status, SearchStatus::found);
}

TEST(Search, ZeroBudgetIsExhausted) {
  const SequencedSpace x(c3(), {0, 2}, true);
  SearchOptions options;
  options.budget = 0;
  const auto r = search_qc(x, x, 2, 0.5, options);
  EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.nodes, 0u);
}

TEST(Search, HeuristicPathThenExactFallback) {
  SearchOptions options;
  options.exact_limit = 0;
  const auto x = diamond_seq(3);
  const auto found = search_qc(x, x, x.length(), 0.1, options);
  ASSERT_EQ(found.status, SearchStatus::found);
  EXPECT_EQ(found.method, "heuristic");
  EXPECT_TRUE(verify_qc(x, x, *found.best).ok());

  const SequencedSpace a(c3(), {0, 2}, true);
  const SequencedSpace b(c3(2.0), {0, 2}, true);
  const auto none = search_qc(a, b, 2, 0.4, options);
  EXPECT_EQ(none.status, SearchStatus::certified_infeasible);
  EXPECT_EQ(none.method, "heuristic+exact");
}

TEST(Search, RejectsBadArguments) {
  const SequencedSpace x(c3(), {0}, true);
  EXPECT_THROW(search_qc(x, x, 0, 0.1), InvalidInput);
  EXPECT_THROW(search_qc(x, x, 2, 0.1), InvalidInput);
  EXPECT_THROW(search_qc(x, x, 1, 0.0), InvalidInput);
}

TEST(Search, StatusNames) {
  EXPECT_EQ(to_string(SearchStatus::found), "found");
  EXPECT_EQ(to_string(SearchStatus::certified_infeasible), "certified-infeasible");
  EXPECT_EQ(to_string(SearchStatus::budget_exhausted), "budget-exhausted");
}

/// Small random pairs: either unrelated causets or a relabeled, slightly
/// perturbed copy, so both outcomes occur.
struct Instance {
  SequencedSpace x;
  SequencedSpace y;
  std::size_t m;
  double eps;
};

Instance random_instance(SplitMix64& rng) {
  const auto s = testing::random_causet(rng.next(), 6);
  FiniteLorentzSpace t;
  if (rng.below(2) == 0) {
    t = testing::random_causet(rng.next(), 6);
  } else {
    const auto perm = testing::random_permutation(s.size(), rng);
    t = testing::permuted(s, perm);
    SquareMatrix<double> d = t.distances();
    for (PointIndex i = 0; i < d.size(); ++i) {
      for (PointIndex j = 0; j < d.size(); ++j) {
        if (d(i, j) > 0.0) {
          d(i, j) += rng.uniform(0.0, 0.3);
        }
      }
    }
    t = FiniteLorentzSpace(t.labels(), d);
  }
  const std::size_t len = 1 + rng.below(3);
  std::vector<PointIndex> sx;
  std::vector<PointIndex> sy;
  for (std::size_t k = 0; k < len; ++k) {
    sx.push_back(rng.below(s.size()));
    sy.push_back(rng.below(t.size()));
  }
  const bool total = rng.below(2) == 0;
  static constexpr double kEps[] = {0.1, 0.3, 0.6, 1.2};
  return {SequencedSpace(s, sx, total), SequencedSpace(t, sy, total), 1 + rng.below(len),
          kEps[rng.below(4)]};
}

TEST(SearchProperty, AgreesWithBruteForce) {
  SplitMix64 rng(2024);
  int found = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto in = random_instance(rng);
    const auto r = search_qc(in.x, in.y, in.m, in.eps);
    ASSERT_TRUE(r.exhaustive) << trial;
    const bool exists = testing::oracle_qc_exists(in.x, in.y, in.m, in.eps);
    EXPECT_EQ(r.status == SearchStatus::found, exists) << trial;
    if (r.status == SearchStatus::found) {
      ++found;
      EXPECT_TRUE(verify_qc(in.x, in.y, *r.best).ok()) << trial;
    } else {
      ++infeasible;
    }
  }
  EXPECT_GT(found, 30);
  EXPECT_GT(infeasible, 30);
}

TEST(SearchProperty, ExactResultIsOptimal) {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto in = random_instance(rng);
    const auto r = search_qc(in.x, in.y, in.m, in.eps);
    if (r.status != SearchStatus::found) {
      continue;
    }
    const double best = distortion(in.x.space(), in.y.space(), r.best->pairs);
    // Nothing beats the optimum, and the optimum itself is reachable.
    if (best > 0.0) {
      EXPECT_FALSE(testing::oracle_qc_exists(in.x, in.y, in.m, best)) << trial;
    }
    EXPECT_TRUE(testing::oracle_qc_exists(
        in.x, in.y, in.m, std::nextafter(best, std::numeric_limits<double>::infinity())))
        << trial;
  }
}

}  // namespace
}  // namespace lms
