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

#ifndef LMS_TIMEFN_HPP
#define LMS_TIMEFN_HPP

#include <optional>
#include <vector>

#include "lms/regions.hpp"
#include "lms/relation.hpp"
#include "lms/space.hpp"

namespace lms {

/// Values of a time function, one per point, with |value - beta| <= alpha.
struct TimeFunction {
  std::vector<double> values;
  double alpha = 1.0;
  double beta = 0.0;
  std::vector<PointIndex> enumeration;
};

/// t / (1 + t), the bounded reparametrization used by every series here.
inline double squash(double t) noexcept { return t / (1.0 + t); }

/// tau(x) = sum_n 2^-n [f(d(x_n, x)) - f(d(x, x_n))] over the enumeration,
/// summed in ascending n. An empty enumeration selects index order.
TimeFunction time_function(const FiniteLorentzSpace& space,
                           std::vector<PointIndex> enumeration = {});

/// First strictly causal pair (x, y) with tau(x) >= tau(y).
Check strictly_monotone(const FiniteLorentzSpace& space, const TimeFunction& tf);

struct TimeFunctionFamily {
  std::vector<QuotientSpace> levels;
  /// tau_n on the classes of levels[n-1].
  std::vector<TimeFunction> tau_n;
  /// The limit function on the whole space.
  TimeFunction tau;
  /// max over ring points of Y_n of |tau_n([x]) - tau(x)|; 0 for an empty ring.
  std::vector<double> deviation;

  /// deviation[n-1] <= 2^-n * alpha for every level.
  bool bound_holds() const noexcept;
};

/// Builds tau_1, ..., tau_N over an increasing exhaustion ending at the whole
/// space. Level k uses `lists[k-1]` (default: ring of Y_k in index order),
/// which must lie in the ring and meet every class of its quotient. A finite
/// list is continued by repeating its last entry, summed in closed form.
TimeFunctionFamily time_function_family(const FiniteLorentzSpace& space,
                                        const std::vector<PointSet>& exhaustion,
                                        std::optional<std::vector<std::vector<PointIndex>>> lists =
                                            std::nullopt);

/// Rescales so that x maps to 0 and y to 1. Throws if tf(x) == tf(y).
TimeFunction affine_normalize(const TimeFunction& tf, PointIndex x, PointIndex y);

}  // namespace lms

#endif  // LMS_TIMEFN_HPP
