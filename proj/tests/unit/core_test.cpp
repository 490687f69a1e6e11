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
#include "lms/models.hpp"
#include "oracles.hpp"

namespace lms {
namespace {

using testing::antichain3;
using testing::c3;
using testing::five_chain;
using testing::index_of;
using testing::line_space;
using testing::point_set;
using Pairs = std::vector<std::pair<PointIndex, PointIndex>>;
using Witness = std::vector<PointIndex>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// ---- validate_axioms ------------------------------------------------------

TEST(ValidateAxioms, ThreeChainPasses) {
  const auto r = validate_axioms(c3());
  EXPECT_TRUE(r.reverse_triangle.ok);
  EXPECT_TRUE(r.distinguishing.ok);
  EXPECT_TRUE(r.ok());
}

TEST(ValidateAxioms, AntichainFailsDistinguishingOnly) {
  const auto r = validate_axioms(antichain3());
  EXPECT_TRUE(r.reverse_triangle.ok);
  EXPECT_FALSE(r.distinguishing.ok);
  EXPECT_EQ(r.distinguishing.witness, (Witness{0, 1}));
}

TEST(ValidateAxioms, ShortcutViolatesReverseTriangle) {
  const auto r = validate_axioms(c3(1.5));
  EXPECT_FALSE(r.reverse_triangle.ok);
  EXPECT_EQ(r.reverse_triangle.witness, (Witness{0, 1, 2}));
}

TEST(ValidateAxioms, ToleranceAbsorbsTinyDeficit) {
  EXPECT_TRUE(validate_axioms(c3(2.0 - 5e-10)).reverse_triangle.ok);
  EXPECT_FALSE(validate_axioms(c3(2.0 - 5e-9)).reverse_triangle.ok);
}

// ---- chronology -----------------------------------------------------------

TEST(Chronology, ThreeChain) {
  const auto i = chronology(c3());
  EXPECT_EQ(i.kind(), RelationKind::chronology);
  EXPECT_EQ(i.pairs(), (Pairs{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Chronology, EpsThickening) {
  const auto ie = chronology_eps(c3(), 1.2);
  EXPECT_EQ(ie.kind(), RelationKind::chronology_eps);
  EXPECT_EQ(ie.eps(), 1.2);
  EXPECT_EQ(ie.pairs(), (Pairs{{0, 2}}));
  // Closed condition: d = eps counts.
  EXPECT_EQ(chronology_eps(c3(), 1.0).count(), 3u);
}

TEST(Chronology, AntichainIsEmpty) { EXPECT_EQ(chronology(antichain3()).count(), 0u); }

TEST(Chronology, NonPositiveEpsRejected) {
  EXPECT_THROW(chronology_eps(c3(), 0.0), InvalidInput);
  EXPECT_THROW(chronology_eps(c3(), -1.0), InvalidInput);
}

// ---- causality ------------------------------------------------------------

TEST(Causality, ThreeChainIsDiagonalPlusChronology) {
  const auto j = causality(c3());
  EXPECT_EQ(j.kind(), RelationKind::causal);
  EXPECT_EQ(j.pairs(), (Pairs{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}));
  EXPECT_TRUE(testing::to_bool_matrix_equal(j, testing::oracle_causal(c3())));
}

TEST(Causality, AntichainRelatesEverything) { EXPECT_EQ(causality(antichain3()).count(), 9u); }

TEST(Causality, OneSidedWitnessSeparatesDirections) {
  // Only d(a,c) = 1 is positive.
  const auto s = testing::labeled({"a", "b", "c"}, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  const auto j = causality(s);
  EXPECT_TRUE(j(0, 1));
  EXPECT_FALSE(j(1, 0));
  EXPECT_TRUE(testing::to_bool_matrix_equal(j, testing::oracle_causal(s)));
}

// ---- check_causal_properties ---------------------------------------------

TEST(CausalProperties, ThreeChainAllTrue) {
  const auto r = check_causal_properties(c3());
  EXPECT_TRUE(r.closed);
  EXPECT_TRUE(r.ok());
}

TEST(CausalProperties, AntichainIsNotAntisymmetric) {
  const auto r = check_causal_properties(antichain3());
  EXPECT_FALSE(r.antisymmetric.ok);
  EXPECT_EQ(r.antisymmetric.witness, (Witness{0, 1}));
  EXPECT_TRUE(r.reflexive.ok);
  EXPECT_TRUE(r.transitive.ok);
}

TEST(CausalProperties, SeededCausetAllTrue) {
  EXPECT_TRUE(check_causal_properties(from_link_weights(8, 1)).ok());
}

// ---- boundaries and hulls -------------------------------------------------

TEST(Boundaries, ThreeChain) {
  const auto b = boundaries(c3());
  EXPECT_EQ(b.future, (PointSet{2}));
  EXPECT_EQ(b.past, (PointSet{0}));
  EXPECT_EQ(b.interior, (PointSet{1}));
}

TEST(Boundaries, Antichain) {
  const auto b = boundaries(antichain3());
  EXPECT_EQ(b.future, (PointSet{0, 1, 2}));
  EXPECT_EQ(b.past, (PointSet{0, 1, 2}));
  EXPECT_TRUE(b.interior.empty());
}

TEST(Boundaries, HalfLineRunsAgainstNumericOrder) {
  const auto s = line_space({1, 2, 3});
  const auto b = boundaries(s);
  EXPECT_EQ(b.future, point_set(s, {"1"}));
  EXPECT_EQ(b.past, point_set(s, {"3"}));
}

TEST(Hull, ChronologicalHullExcludesEndpoints) {
  const auto s = c3();
  EXPECT_EQ(hull(s, {0, 2}, chronology(s)), (PointSet{1}));
  EXPECT_EQ(hull(s, {0, 2}, causality(s)), (PointSet{0, 1, 2}));
  EXPECT_TRUE(hull(s, {1}, chronology(s)).empty());
  EXPECT_THROW(hull(s, {}, chronology(s)), InvalidInput);
}

// ---- is_generating --------------------------------------------------------

TEST(IsGenerating, ThreeChainEndpointsUncovered) {
  const auto g = is_generating(c3(), {0, 2});
  EXPECT_FALSE(g.ok);
  EXPECT_EQ(g.uncovered, (PointSet{0, 2}));
}

TEST(IsGenerating, FiveChainEndpointsUncovered) {
  const auto s = five_chain();
  const auto g = is_generating(s, point_set(s, {"1", "5"}));
  EXPECT_FALSE(g.ok);
  EXPECT_EQ(g.uncovered, point_set(s, {"1", "5"}));
}

TEST(IsGenerating, HalfLineSampleEndpointsUncovered) {
  // Every interior sample lies strictly between 0.5 and 5, but the two
  // generators themselves have no strict neighbour in S.
  const auto s = line_space({0.5, 1, 2, 3, 5});
  const auto g = is_generating(s, point_set(s, {"0.5", "5"}));
  EXPECT_FALSE(g.ok);
  EXPECT_EQ(g.uncovered, point_set(s, {"0.5", "5"}));
  EXPECT_TRUE(is_generating(s, point_set(s, {"0.5", "1", "3", "5"})).uncovered ==
              point_set(s, {"0.5", "5"}));
}

// ---- truncation -----------------------------------------------------------

TEST(Truncation, HalfLineSample) {
  const auto s = line_space({0.5, 1, 2, 3, 5});
  const SequencedSpace ss(s, {index_of(s, "0.5"), index_of(s, "5")});
  const auto t = truncation(ss, 2);
  EXPECT_EQ(t.order(), 2u);
  EXPECT_EQ(t.xm(), s.all_points());
  EXPECT_EQ(t.cover(1.0), point_set(s, {"2", "3"}));
  EXPECT_TRUE(t.contains(index_of(s, "1")));
}

TEST(Truncation, FirstLevelIsTheAnchor) {
  const auto s = line_space({0.5, 1, 2, 3, 5});
  const SequencedSpace ss(s, {index_of(s, "0.5"), index_of(s, "5")});
  EXPECT_EQ(truncation(ss, 1).xm(), point_set(s, {"0.5"}));
}

TEST(Truncation, TotalFlagTakesEverything) {
  const SequencedSpace ss(c3(), {1}, true);
  EXPECT_EQ(truncation(ss, 1).xm(), (PointSet{0, 1, 2}));
}

TEST(Truncation, OrderOutOfRange) {
  const SequencedSpace ss(c3(), {0, 2});
  EXPECT_THROW(truncation(ss, 0), InvalidInput);
  EXPECT_THROW(truncation(ss, 3), InvalidInput);
}

TEST(Truncation, MatchesOracleOnRandomSequences) {
  SplitMix64 rng(77);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = testing::random_causet(seed, 9);
    std::vector<PointIndex> seq;
    for (std::size_t k = 0, len = 1 + rng.below(6); k < len; ++k) {
      seq.push_back(rng.below(s.size()));
    }
    const SequencedSpace ss(s, seq);
    for (std::size_t m = 1; m <= seq.size(); ++m) {
      const auto in = testing::oracle_xm(ss, m);
      const auto t = truncation(ss, m);
      for (PointIndex x = 0; x < s.size(); ++x) {
        ASSERT_EQ(t.contains(x), in[x]) << "seed " << seed << " m " << m << " x " << x;
      }
    }
  }
}

// ---- time separations ------------------------------------------------------

TEST(TimeSeparation, CausalRelationKeepsDistances) {
  const auto s = c3();
  const auto ts = to_time_separation(s, causality(s));
  EXPECT_EQ(ts.l(0, 1), 1.0);
  EXPECT_EQ(ts.l(1, 0), kNegInf);
  EXPECT_EQ(ts.l(0, 0), 0.0);
  EXPECT_EQ(ts.labels, s.labels());
}

TEST(TimeSeparation, ChronologyPlusDiagonal) {
  const auto s = c3();
  Relation k = chronology(s);
  for (PointIndex x = 0; x < 3; ++x) {
    k.set(x, x);
  }
  const auto ts = to_time_separation(s, k);
  EXPECT_EQ(ts.l(0, 2), 2.5);
  EXPECT_EQ(ts.l(0, 1), 1.0);
  EXPECT_EQ(ts.l(2, 0), kNegInf);
  EXPECT_TRUE(extended_reverse_triangle(ts).ok);
}

TEST(TimeSeparation, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = testing::random_causet(seed);
    const auto j = causality(s);
    const auto [back, k] = from_time_separation(to_time_separation(s, j));
    EXPECT_EQ(back.distances(), s.distances());
    EXPECT_EQ(back.labels(), s.labels());
    EXPECT_TRUE(k.same_pairs(j));
  }
}

TEST(TimeSeparation, RejectsRelationsOutsideTheBracket) {
  const auto s = c3();
  Relation too_small(3);
  for (PointIndex x = 0; x < 3; ++x) {
    too_small.set(x, x);
  }
  EXPECT_THROW(to_time_separation(s, too_small), InvalidInput);
  Relation too_big = causality(s);
  too_big.set(2, 0);
  EXPECT_THROW(to_time_separation(s, too_big), InvalidInput);
}

TEST(TimeSeparation, RejectsBothWaysPositive) {
  TimeSeparation ts{{"a", "b"}, SquareMatrix<double>(2, 0.0), 1e-9};
  ts.l(0, 1) = 1.0;
  ts.l(1, 0) = 1.0;
  EXPECT_THROW(from_time_separation(ts), InvalidInput);
}

TEST(TimeSeparation, ExtendedInequalityWitness) {
  TimeSeparation ts{{"a", "b", "c"}, SquareMatrix<double>(3, kNegInf), 1e-9};
  for (PointIndex x = 0; x < 3; ++x) {
    ts.l(x, x) = 0.0;
  }
  ts.l(0, 1) = 1.0;
  ts.l(1, 2) = 1.0;
  const auto c = extended_reverse_triangle(ts);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.witness, (Witness{0, 1, 2}));
  EXPECT_THROW(from_time_separation(ts), InvalidInput);
  ts.l(0, 2) = 2.0;
  EXPECT_TRUE(extended_reverse_triangle(ts).ok);
}

// ---- properties over random causets --------------------------------------

class RandomCausets : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomCausets, ChronologyIsTransitiveAndIrreflexive) {
  const auto s = testing::random_causet(GetParam());
  const auto i = chronology(s);
  EXPECT_TRUE(i.transitive().ok);
  EXPECT_TRUE(i.irreflexive().ok);
  EXPECT_TRUE(testing::to_bool_matrix_equal(i, testing::oracle_chronology(s)));
}

TEST_P(RandomCausets, ThickeningsComposeAdditively) {
  const auto s = testing::random_causet(GetParam());
  SplitMix64 rng(GetParam());
  for (int k = 0; k < 5; ++k) {
    const double e1 = rng.uniform(0.1, 2.0);
    const double e2 = rng.uniform(0.1, 2.0);
    EXPECT_TRUE(chronology_eps(s, e1).then(chronology_eps(s, e2)).subset_of(
                    chronology_eps(s, e1 + e2 - 2 * s.tol())).ok);
  }
}

TEST_P(RandomCausets, CausalityMatchesDefinitionAndProperties) {
  const auto s = testing::random_causet(GetParam());
  const auto j = causality(s);
  EXPECT_TRUE(testing::to_bool_matrix_equal(j, testing::oracle_causal(s)));
  EXPECT_TRUE(chronology(s).subset_of(j).ok);
  EXPECT_TRUE(check_causal_properties(s).ok());
}

TEST_P(RandomCausets, InteriorIsTheHullOfEverything) {
  const auto s = testing::random_causet(GetParam());
  EXPECT_EQ(boundaries(s).interior, hull(s, s.all_points(), chronology(s)));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCausets, ::testing::Range<std::uint64_t>(0, 40));

}  // namespace
}  // namespace lms
