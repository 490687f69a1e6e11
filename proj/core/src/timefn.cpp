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

#include "lms/timefn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lms/core.hpp"
#include "lms/parallel.hpp"

namespace lms {

namespace {

double term(const FiniteLorentzSpace& s, PointIndex p, PointIndex x) {
  return squash(s(p, x)) - squash(s(x, p));
}

// sum_j 2^-j term(s_j, x) with s_j = s_L for j > L; total weight 1.
double level_sum(const FiniteLorentzSpace& s, const std::vector<PointIndex>& list, PointIndex x) {
  if (list.empty()) {
    return 0.0;
  }
  double sum = 0.0;
  double w = 1.0;
  for (PointIndex p : list) {
    w *= 0.5;
    sum += w * term(s, p, x);
  }
  return sum + w * term(s, list.back(), x);
}

void check_indices(const FiniteLorentzSpace& space, const std::vector<PointIndex>& points) {
  for (PointIndex p : points) {
    if (p >= space.size()) {
      throw InvalidInput("point index " + std::to_string(p) + " out of range");
    }
  }
}

}  // namespace

TimeFunction time_function(const FiniteLorentzSpace& space, std::vector<PointIndex> enumeration) {
  if (enumeration.empty()) {
    enumeration.resize(space.size());
    std::iota(enumeration.begin(), enumeration.end(), PointIndex{0});
  }
  check_indices(space, enumeration);
  TimeFunction tf;
  tf.values.assign(space.size(), 0.0);
  parallel_for(space.size(), [&](std::size_t x) {
    double sum = 0.0;
    double w = 1.0;
    for (PointIndex p : enumeration) {
      w *= 0.5;
      sum += w * term(space, p, x);
    }
    tf.values[x] = sum;
  });
  tf.enumeration = std::move(enumeration);
  return tf;
}

Check strictly_monotone(const FiniteLorentzSpace& space, const TimeFunction& tf) {
  if (tf.values.size() != space.size()) {
    throw InvalidInput("time function does not match the space");
  }
  const Relation j = causality(space);
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (j(x, y) && !j(y, x) && !(tf.values[x] < tf.values[y])) {
        return {false, {x, y}};
      }
    }
  }
  return {};
}

bool TimeFunctionFamily::bound_holds() const noexcept {
  double bound = 1.0;
  for (std::size_t n = 0; n < deviation.size(); ++n) {
    bound *= 0.5;
    if (deviation[n] > bound * tau.alpha) {
      return false;
    }
  }
  return true;
}

TimeFunctionFamily time_function_family(const FiniteLorentzSpace& space,
                                        const std::vector<PointSet>& exhaustion,
                                        std::optional<std::vector<std::vector<PointIndex>>> lists) {
  const std::size_t levels = exhaustion.size();
  if (levels == 0) {
    throw InvalidInput("exhaustion must have at least one level");
  }
  for (std::size_t k = 1; k < levels; ++k) {
    if (!std::includes(exhaustion[k].begin(), exhaustion[k].end(), exhaustion[k - 1].begin(),
                       exhaustion[k - 1].end())) {
      throw InvalidInput("exhaustion is not increasing at level " + std::to_string(k + 1));
    }
  }
  if (exhaustion.back() != space.all_points()) {
    throw InvalidInput("the last exhaustion level must be the whole space");
  }
  if (lists && lists->size() != levels) {
    throw InvalidInput("expected one list per exhaustion level");
  }

  TimeFunctionFamily family;
  std::vector<std::vector<PointIndex>> level_lists(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    family.levels.push_back(quotient(space, exhaustion[k]));
    const QuotientSpace& q = family.levels.back();
    if (!lists) {
      level_lists[k] = q.ring;
      continue;
    }
    level_lists[k] = (*lists)[k];
    std::vector<char> hit(q.classes.size(), 0);
    for (PointIndex p : level_lists[k]) {
      if (p >= space.size() || q.class_index[p] == QuotientSpace::npos) {
        throw InvalidInput("list for level " + std::to_string(k + 1) +
                           " leaves the ring of its region");
      }
      hit[q.class_index[p]] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      throw InvalidInput("list for level " + std::to_string(k + 1) + " misses a class");
    }
  }

  // inner[k][x] = level_sum of level k at x, for every point of the space.
  std::vector<std::vector<double>> inner(levels, std::vector<double>(space.size(), 0.0));
  parallel_for(space.size(), [&](std::size_t x) {
    for (std::size_t k = 0; k < levels; ++k) {
      inner[k][x] = level_sum(space, level_lists[k], x);
    }
  });

  auto partial = [&](std::size_t n, PointIndex x) {
    double sum = 0.0;
    double w = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      w *= 0.5;
      sum += w * inner[k][x];
    }
    return std::pair{sum, w};
  };

  family.tau.values.assign(space.size(), 0.0);
  family.tau.enumeration = level_lists.back();
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto [sum, w] = partial(levels, x);
    family.tau.values[x] = sum + w * inner[levels - 1][x];
  }

  for (std::size_t n = 1; n <= levels; ++n) {
    const QuotientSpace& q = family.levels[n - 1];
    TimeFunction tf;
    tf.enumeration = level_lists[n - 1];
    tf.values.reserve(q.classes.size());
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
      tf.values.push_back(partial(n, q.representative(c)).first);
    }
    double worst = 0.0;
    for (PointIndex x : q.ring) {
      worst = std::max(worst, std::abs(tf.values[q.class_of(x)] - family.tau.values[x]));
    }
    family.deviation.push_back(worst);
    family.tau_n.push_back(std::move(tf));
  }
  return family;
}

TimeFunction affine_normalize(const TimeFunction& tf, PointIndex x, PointIndex y) {
  if (x >= tf.values.size() || y >= tf.values.size()) {
    throw InvalidInput("normalization point out of range");
  }
  const double c0 = tf.values[x];
  const double c1 = tf.values[y];
  if (c0 == c1) {
    throw InvalidInput("time function takes equal values at the normalization points");
  }
  const double scale = c1 - c0;
  TimeFunction out = tf;
  for (double& v : out.values) {
    v = (v - c0) / scale;
  }
  out.values[x] = 0.0;
  out.values[y] = 1.0;
  out.alpha = tf.alpha / std::abs(scale);
  out.beta = (tf.beta - c0) / scale;
  return out;
}

}  // namespace lms
