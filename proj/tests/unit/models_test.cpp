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

#include "lms/core.hpp"
#include "lms/models.hpp"

namespace lms {
namespace {

TEST(SplitMix64, ReferenceVectors) {
  // Produced by an independent big-integer implementation; see docs/prng.md.
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(zero.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(zero.next(), 0x06C45D188009454FULL);
  EXPECT_EQ(zero.next(), 0xF88BB8A8724C81ECULL);
  SplitMix64 answer(42);
  EXPECT_EQ(answer.next(), 0xBDD732262FEB6E95ULL);
  EXPECT_EQ(answer.next(), 0x28EFE333B266F103ULL);
  EXPECT_EQ(SplitMix64(7).uniform01(), 0.3898297483912715);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const double u = rng.uniform(-2.0, 3.0);
    EXPECT_GE(u, -2.0);
    EXPECT_LT(u, 3.0);
  }
}

TEST(Minkowski, DistanceInsideAndOutsideTheLightCone) {
  EXPECT_DOUBLE_EQ(minkowski_distance({0, {0}}, {2, {1}}), std::sqrt(3.0));
  EXPECT_EQ(minkowski_distance({2, {1}}, {0, {0}}), 0.0);
  EXPECT_EQ(minkowski_distance({0, {0}}, {1, {2}}), 0.0);
  EXPECT_EQ(minkowski_distance({0, {0}}, {1, {1}}), 0.0);
  EXPECT_DOUBLE_EQ(minkowski_distance({0, {0, 0}}, {5, {3, 0}}), 4.0);
  EXPECT_THROW(minkowski_distance({0, {0}}, {1, {0, 0}}), InvalidInput);
}

TEST(Diamond, TwoDimensionalGridCorners) {
  const auto s = sample_diamond(2, 5, SampleMode::grid);
  EXPECT_EQ(s.space.size(), 25u);
  const auto corners = diamond_corners(s);
  EXPECT_EQ(s.space.d(corners[0], corners[1]), 1.0);
  EXPECT_EQ(s.space.d(corners[2], corners[3]), 0.0);
  EXPECT_EQ(s.space.d(corners[0], corners[2]), 0.0);
  // The spatial corners see no timelike pair at all, so they coincide.
  const auto axioms = validate_axioms(s.space);
  EXPECT_TRUE(axioms.reverse_triangle.ok);
  EXPECT_EQ(axioms.distinguishing.witness, (std::vector<PointIndex>{corners[3], corners[2]}));
  EXPECT_EQ(diamond_corners(sample_diamond(2, 3, SampleMode::grid)),
            (std::vector<PointIndex>{0, 8, 6, 2}));
}

TEST(Diamond, GridDistancesMatchTheMetric) {
  // Compared as squares: null pairs are exact zeros on the lattice, while the
  // rounded coordinates leave an interval of order 1e-17 whose root is ~1e-9.
  for (std::size_t dim : {2u, 3u}) {
    const auto s = sample_diamond(dim, 4, SampleMode::grid);
    for (PointIndex a = 0; a < s.points.size(); ++a) {
      for (PointIndex b = 0; b < s.points.size(); ++b) {
        const double expected = minkowski_distance(s.points[a], s.points[b]);
        EXPECT_NEAR(s.space.d(a, b) * s.space.d(a, b), expected * expected, 1e-12);
      }
    }
  }
}

TEST(Diamond, ThreeDimensionalGridIsClipped) {
  // One point at each tip and a plus-shaped slice of five in the middle.
  EXPECT_EQ(sample_diamond(3, 3, SampleMode::grid).space.size(), 7u);
}

TEST(Diamond, PoissonIsReproducibleAndInside) {
  for (std::size_t dim : {2u, 3u, 4u}) {
    const auto a = sample_diamond(dim, 30, SampleMode::poisson, 9);
    const auto b = sample_diamond(dim, 30, SampleMode::poisson, 9);
    const auto c = sample_diamond(dim, 30, SampleMode::poisson, 10);
    EXPECT_EQ(a.space.distances(), b.space.distances());
    EXPECT_NE(a.space.distances(), c.space.distances());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      const auto& p = a.points[i];
      double r2 = 0.0;
      for (double x : p.x) {
        r2 += x * x;
      }
      EXPECT_LE(std::sqrt(r2), std::min(p.t, 1.0 - p.t) + 1e-12);
      for (std::size_t j = 0; j < a.points.size(); ++j) {
        EXPECT_NEAR(a.space.d(i, j), minkowski_distance(p, a.points[j]), 1e-12);
      }
    }
  }
}

TEST(Diamond, SinglePointAndBadArguments) {
  const auto one = sample_diamond(3, 1, SampleMode::grid);
  ASSERT_EQ(one.points.size(), 1u);
  EXPECT_EQ(one.points[0].t, 0.5);
  EXPECT_THROW(sample_diamond(1, 3, SampleMode::grid), InvalidInput);
  EXPECT_THROW(sample_diamond(2, 0, SampleMode::poisson), InvalidInput);
}

TEST(Diamond, NearestPairingOfASampleWithItself) {
  const auto s = sample_diamond(2, 4, SampleMode::grid);
  const auto pairs = nearest_pairing(s, s);
  ASSERT_EQ(pairs.size(), s.points.size());
  for (PointIndex i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(pairs[i], (IndexPair{i, i}));
  }
}

TEST(HalfLine, Sequences) {
  EXPECT_EQ(halfline_sequence(2, 6), (std::vector<double>{2, 3, 1, 4, 0.5, 5}));
  EXPECT_EQ(halfline_sequence(3, 7), (std::vector<double>{3, 4, 2, 5, 1, 6, 0.5}));
  EXPECT_EQ(realline_sequence(5), (std::vector<double>{0, 1, -1, 2, -2}));
  EXPECT_THROW(halfline_sequence(0, 3), InvalidInput);
}

TEST(HalfLine, SampleIsCutAtTheFirstMissingTerm) {
  std::vector<double> pts;
  for (int j = 1; j <= 20; ++j) {
    pts.push_back(0.5 * j);
  }
  const auto s = halfline_space(pts, 2);
  ASSERT_EQ(s.space.length(), 6u);
  EXPECT_EQ(s.points[s.space.anchor(2)], 3.0);
  EXPECT_EQ(s.space.space().label(s.space.anchor(5)), "0.5");
  const PointIndex three = *s.space.space().find("3");
  const PointIndex one = *s.space.space().find("1");
  EXPECT_EQ(s.space.space().d(three, one), 2.0);
  EXPECT_EQ(s.space.space().d(one, three), 0.0);
}

TEST(HalfLine, BadSamples) {
  EXPECT_THROW(halfline_space({0.0, 1.0, 2.0}, 1), InvalidInput);
  EXPECT_THROW(halfline_space({1.0, 1.0}, 1), InvalidInput);
  EXPECT_THROW(halfline_space({1.0, 2.0}, 4), InvalidInput);
  EXPECT_THROW(realline_space({1.0, 2.0}), InvalidInput);
}

TEST(HalfLine, ShiftPairsKeepOnlySampledImages) {
  const auto from = realline_space({0, 1, 2, 3});
  const auto to = realline_space({0, 1, -1});
  EXPECT_EQ(shift_pairs(from, to, 2.0), (std::vector<IndexPair>{{1, 2}, {2, 0}, {3, 1}}));
}

TEST(LinkWeights, HeaviestPath) {
  // a -> b -> d weighs 3, a -> c -> d weighs 3.5.
  const auto s = from_link_weights(4, {{0, 1, 1.0}, {0, 2, 2.0}, {1, 3, 2.0}, {2, 3, 1.5}});
  EXPECT_EQ(s.d(0, 3), 3.5);
  EXPECT_EQ(s.d(0, 1), 1.0);
  EXPECT_EQ(s.d(1, 2), 0.0);
  EXPECT_EQ(s.d(3, 0), 0.0);
  EXPECT_TRUE(validate_axioms(s).reverse_triangle.ok);
  EXPECT_EQ(s.label(2), "x2");
}

TEST(LinkWeights, InvalidGraphs) {
  EXPECT_THROW(from_link_weights(2, {{0, 1, 1.0}, {1, 0, 1.0}}), InvalidInput);
  EXPECT_THROW(from_link_weights(2, {{0, 2, 1.0}}), InvalidInput);
  EXPECT_THROW(from_link_weights(2, {{0, 1, 0.0}}), InvalidInput);
  EXPECT_THROW(from_link_weights(0, 1), InvalidInput);
  EXPECT_THROW(from_link_weights(3, 1, 1.5), InvalidInput);
}

TEST(LinkWeights, RandomCausetsAreDistinguishingLorentzSpaces) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = from_link_weights(10, seed, 0.3);
    EXPECT_TRUE(validate_axioms(s).ok()) << seed;
    EXPECT_EQ(s.distances(), from_link_weights(10, seed, 0.3).distances());
  }
}

TEST(Causets, ChainAndAntichain) {
  const auto c = chain(4, 0.5);
  EXPECT_EQ(c.d(0, 3), 1.5);
  EXPECT_EQ(c.d(3, 0), 0.0);
  EXPECT_TRUE(validate_axioms(c).ok());
  EXPECT_FALSE(validate_axioms(antichain(3)).distinguishing.ok);
  EXPECT_TRUE(validate_axioms(antichain(1)).ok());
  EXPECT_THROW(chain(3, -1.0), InvalidInput);
  EXPECT_THROW(antichain(0), InvalidInput);
}

}  // namespace
}  // namespace lms
