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

#include "fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace lms::testing {

FiniteLorentzSpace c3(double ac) {
  return labeled({"a", "b", "c"}, {{0, 1, ac}, {0, 0, 1}, {0, 0, 0}});
}

FiniteLorentzSpace antichain3() {
  return labeled({"a", "b", "c"}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
}

FiniteLorentzSpace five_chain() {
  std::vector<std::vector<double>> rows(5, std::vector<double>(5, 0.0));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      rows[i][j] = j - i;
    }
  }
  return labeled({"1", "2", "3", "4", "5"}, rows);
}

FiniteLorentzSpace line_space(const std::vector<double>& points) {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> rows;
  for (double x : points) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    labels.emplace_back(buf, res.ptr);
    std::vector<double> row;
    for (double y : points) {
      row.push_back(std::max(x - y, 0.0));
    }
    rows.push_back(std::move(row));
  }
  return labeled(std::move(labels), std::move(rows));
}

FiniteLorentzSpace labeled(std::vector<std::string> labels, std::vector<std::vector<double>> rows) {
  return FiniteLorentzSpace(std::move(labels), rows);
}

FiniteLorentzSpace random_causet(std::uint64_t seed, std::size_t max_n) {
  SplitMix64 rng(seed ^ 0x5EEDULL);
  const std::size_t n = 1 + rng.below(max_n);
  const double p = rng.uniform(0.15, 0.7);
  return from_link_weights(n, seed, p);
}

FiniteLorentzSpace with_duplicates(const FiniteLorentzSpace& space, std::size_t copies,
                                   SplitMix64& rng) {
  const std::size_t n = space.size();
  std::vector<PointIndex> source(n);
  std::iota(source.begin(), source.end(), PointIndex{0});
  auto labels = space.labels();
  for (std::size_t k = 0; k < copies; ++k) {
    const PointIndex s = rng.below(n);
    source.push_back(s);
    labels.push_back(space.label(s) + "'" + std::to_string(k));
  }
  SquareMatrix<double> d(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      d(i, j) = space.d(source[i], source[j]);
    }
  }
  return FiniteLorentzSpace(std::move(labels), std::move(d), space.tol());
}

PointSet random_subset(std::size_t n, SplitMix64& rng, double keep) {
  PointSet out;
  for (PointIndex i = 0; i < n; ++i) {
    if (rng.uniform01() < keep) {
      out.push_back(i);
    }
  }
  if (out.empty()) {
    out.push_back(rng.below(n));
  }
  return out;
}

std::vector<PointIndex> random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<PointIndex> perm(n);
  std::iota(perm.begin(), perm.end(), PointIndex{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return perm;
}

FiniteLorentzSpace permuted(const FiniteLorentzSpace& space, const std::vector<PointIndex>& perm) {
  return space.restricted_to(perm);
}

PointIndex index_of(const FiniteLorentzSpace& space, const std::string& label) {
  const auto found = space.find(label);
  if (!found) {
    throw std::out_of_range("no point labeled " + label);
  }
  return *found;
}

PointSet point_set(const FiniteLorentzSpace& space, const std::vector<std::string>& labels) {
  std::vector<PointIndex> points;
  for (const auto& l : labels) {
    points.push_back(index_of(space, l));
  }
  return make_point_set(points);
}

}  // namespace lms::testing
