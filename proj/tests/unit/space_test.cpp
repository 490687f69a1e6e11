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
#include "lms/space.hpp"

namespace lms {
namespace {

using Rows = std::vector<std::vector<double>>;

using testing::c3;

TEST(FiniteLorentzSpace, StoresLabelsAndDistances) {
  const auto s = c3();
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.label(1), "b");
  EXPECT_DOUBLE_EQ(s.d(0, 2), 2.5);
  EXPECT_DOUBLE_EQ(s(0, 1), 1.0);
  EXPECT_EQ(s.tol(), kDefaultTolerance);
  EXPECT_EQ(s.find("c"), PointIndex{2});
  EXPECT_FALSE(s.find("z").has_value());
}

TEST(FiniteLorentzSpace, PrecedesUsesStrictTolerance) {
  const FiniteLorentzSpace s({"a", "b"}, {{0, 1e-9}, {2e-9, 0}}, 1e-9);
  EXPECT_FALSE(s.precedes(0, 1));
  EXPECT_TRUE(s.precedes(1, 0));
}

TEST(FiniteLorentzSpace, RejectsNonSquareMatrix) {
  EXPECT_THROW(FiniteLorentzSpace({"a", "b"}, {{0, 1}, {0}}), InvalidInput);
  EXPECT_THROW(FiniteLorentzSpace({"a", "b", "c"}, {{0, 1}, {0, 0}}), InvalidInput);
}

TEST(FiniteLorentzSpace, RejectsNegativeAndNonFiniteEntries) {
  EXPECT_THROW(FiniteLorentzSpace({"a", "b"}, {{0, -1}, {0, 0}}), InvalidInput);
  EXPECT_THROW(FiniteLorentzSpace({"a", "b"}, {{0, std::nan("")}, {0, 0}}), InvalidInput);
  EXPECT_THROW(
      FiniteLorentzSpace({"a", "b"}, {{0, std::numeric_limits<double>::infinity()}, {0, 0}}),
      InvalidInput);
}

TEST(FiniteLorentzSpace, DiagonalWithinToleranceIsZeroed) {
  const FiniteLorentzSpace s({"a"}, Rows{{5e-10}});
  EXPECT_EQ(s.d(0, 0), 0.0);
  EXPECT_THROW(FiniteLorentzSpace({"a"}, Rows{{1e-6}}), InvalidInput);
}

TEST(FiniteLorentzSpace, RejectsDuplicateLabelsAndBadTolerance) {
  EXPECT_THROW(FiniteLorentzSpace({"a", "a"}, Rows{{0, 0}, {0, 0}}), InvalidInput);
  EXPECT_THROW(FiniteLorentzSpace({"a"}, Rows{{0}}, -1.0), InvalidInput);
  EXPECT_THROW(FiniteLorentzSpace({"a"}, Rows{{0}}, std::nan("")), InvalidInput);
}

TEST(FiniteLorentzSpace, RestrictionKeepsGivenOrder) {
  const auto s = c3().restricted_to({2, 0});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.label(0), "c");
  EXPECT_DOUBLE_EQ(s.d(1, 0), 2.5);
  EXPECT_DOUBLE_EQ(s.d(0, 1), 0.0);
}

TEST(FiniteLorentzSpace, ReversalTransposes) {
  const auto r = c3().reversed();
  EXPECT_DOUBLE_EQ(r.d(2, 0), 2.5);
  EXPECT_DOUBLE_EQ(r.d(0, 2), 0.0);
  EXPECT_EQ(r.reversed().distances(), c3().distances());
}

TEST(FiniteLorentzSpace, AllPoints) {
  EXPECT_EQ(c3().all_points(), (PointSet{0, 1, 2}));
  EXPECT_TRUE(FiniteLorentzSpace().all_points().empty());
}

TEST(SequencedSpace, AnchorsCountFromOne) {
  const SequencedSpace ss(c3(), {0, 2, 0});
  EXPECT_EQ(ss.length(), 3u);
  EXPECT_EQ(ss.anchor(1), 0u);
  EXPECT_EQ(ss.anchor(2), 2u);
  EXPECT_FALSE(ss.total());
}

TEST(SequencedSpace, RejectsEmptyAndOutOfRangeSequences) {
  EXPECT_THROW(SequencedSpace(c3(), {}), InvalidInput);
  EXPECT_THROW(SequencedSpace(c3(), {0, 3}), InvalidInput);
}

TEST(PointSetHelper, SortsAndDeduplicates) {
  EXPECT_EQ(make_point_set({3, 1, 3, 0}), (PointSet{0, 1, 3}));
}

TEST(SquareMatrixTest, RowAndTranspose) {
  SquareMatrix<int> m(2);
  m(0, 1) = 7;
  EXPECT_EQ(m.row(0)[1], 7);
  EXPECT_EQ(m.transposed()(1, 0), 7);
  EXPECT_EQ(m.transposed().transposed(), m);
}

}  // namespace
}  // namespace lms
