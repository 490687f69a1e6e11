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

#ifndef LMS_TESTS_FIXTURES_HPP
#define LMS_TESTS_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lms/lms.hpp"

namespace lms::testing {

/// a -> b -> c with d(a,b) = d(b,c) = 1 and d(a,c) = `ac`.
FiniteLorentzSpace c3(double ac = 2.5);

/// Three points named a, b, c with all distances zero.
FiniteLorentzSpace antichain3();

/// Points "1".."5" with d(i,j) = j - i for i < j.
FiniteLorentzSpace five_chain();

/// d(x,y) = (x - y)+ on the given reals, labels in shortest form.
FiniteLorentzSpace line_space(const std::vector<double>& points);

FiniteLorentzSpace labeled(std::vector<std::string> labels, std::vector<std::vector<double>> rows);

/// Seeded link-weight causet with 1..max_n points.
FiniteLorentzSpace random_causet(std::uint64_t seed, std::size_t max_n = 12);

/// Copies `copies` random points (identical rows and columns, zero distance
/// to their original), which creates indistinguishable pairs.
FiniteLorentzSpace with_duplicates(const FiniteLorentzSpace& space, std::size_t copies,
                                   SplitMix64& rng);

/// Uniformly random subset, nonempty.
PointSet random_subset(std::size_t n, SplitMix64& rng, double keep = 0.5);

std::vector<PointIndex> random_permutation(std::size_t n, SplitMix64& rng);

/// The space with points reordered: point k of the result is points[perm[k]].
FiniteLorentzSpace permuted(const FiniteLorentzSpace& space, const std::vector<PointIndex>& perm);

PointIndex index_of(const FiniteLorentzSpace& space, const std::string& label);
PointSet point_set(const FiniteLorentzSpace& space, const std::vector<std::string>& labels);

}  // namespace lms::testing

#endif  // LMS_TESTS_FIXTURES_HPP
