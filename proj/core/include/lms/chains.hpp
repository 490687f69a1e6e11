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

#ifndef LMS_CHAINS_HPP
#define LMS_CHAINS_HPP

#include <optional>
#include <vector>

#include "lms/relation.hpp"
#include "lms/space.hpp"

namespace lms {

enum class ChainMode { isochronal, isocausal };

/// Finite stand-in for a curve: every earlier point precedes every later one.
struct Chain {
  std::vector<PointIndex> points;
  ChainMode mode = ChainMode::isocausal;

  bool operator==(const Chain&) const = default;
};

/// (x,y) in J and (y,x) not in J.
inline bool strictly_causal(const Relation& j, PointIndex x, PointIndex y) noexcept {
  return j(x, y) && !j(y, x);
}

/// Checks every pair s < t. The witness holds the positions (s, t) of the
/// first violation.
Check validate_chain(const FiniteLorentzSpace& space, const Chain& chain);

/// Sum of d over consecutive elements. Throws if the chain is not isocausal.
double chain_length(const FiniteLorentzSpace& space, const Chain& chain);

/// d additive within tol on every triple i < j < k. Throws if the chain is not isocausal.
bool is_maximal_chain(const FiniteLorentzSpace& space, const Chain& chain);

/// Longest strict-J chain length between every pair (0 where no chain exists).
/// Throws if strict J has a cycle, which needs tolerance near-ties.
SquareMatrix<double> dcheck(const FiniteLorentzSpace& space);

struct LengthReport {
  bool ok = true;
  double worst_gap = 0.0;          // max over x << y of d(x,y) - dcheck(x,y)
  std::vector<PointIndex> witness;  // first pair with a gap above tol
};

LengthReport check_length_property(const FiniteLorentzSpace& space);

/// Chain attaining dcheck(x,y), preferring more points on length ties and
/// then the smallest predecessor index. Empty unless x << y.
std::optional<Chain> maximal_chain_between(const FiniteLorentzSpace& space, PointIndex x,
                                           PointIndex y);

}  // namespace lms

#endif  // LMS_CHAINS_HPP
