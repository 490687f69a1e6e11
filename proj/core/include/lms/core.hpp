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

#ifndef LMS_CORE_HPP
#define LMS_CORE_HPP

#include <utility>
#include <vector>

#include "lms/relation.hpp"
#include "lms/space.hpp"

namespace lms {

struct AxiomReport {
  Check reverse_triangle;  // witness (x, y, z)
  Check distinguishing;    // witness (x, y)

  bool ok() const noexcept { return reverse_triangle.ok && distinguishing.ok; }
};

AxiomReport validate_axioms(const FiniteLorentzSpace& space);

/// I: pairs with d > tol.
Relation chronology(const FiniteLorentzSpace& space);

/// I_eps: pairs with d >= eps. Throws unless eps > 0.
Relation chronology_eps(const FiniteLorentzSpace& space, double eps);

/// The maximal causal relation J.
Relation causality(const FiniteLorentzSpace& space);

struct CausalReport {
  bool closed = true;  // every relation on a finite set is closed
  Check reflexive;
  Check transitive;
  Check antisymmetric;
  Check i_subset_j;
  Check push_up;            // witness (x, y, z) with x->y->z composable but (x,z) not in I
  Check causal_additivity;  // witness (x, y, z)

  bool ok() const noexcept {
    return reflexive.ok && transitive.ok && antisymmetric.ok && i_subset_j.ok && push_up.ok &&
           causal_additivity.ok;
  }
};

CausalReport check_causal_properties(const FiniteLorentzSpace& space);

struct Boundaries {
  PointSet future;    // X+
  PointSet past;      // X-
  PointSet interior;  // I(X)
};

Boundaries boundaries(const FiniteLorentzSpace& space);

/// R+(A) intersected with R-(A). Throws on empty A.
PointSet hull(const FiniteLorentzSpace& space, const PointSet& a, const Relation& relation);

struct GeneratingCheck {
  bool ok = true;
  PointSet uncovered;
};

GeneratingCheck is_generating(const FiniteLorentzSpace& space, const PointSet& s);

/// X^m together with the data needed for the eps-cores I_eps(p^1, ..., p^m).
class Truncation {
 public:
  Truncation(const SequencedSpace& seq_space, std::size_t m);

  std::size_t order() const noexcept { return m_; }
  const PointSet& xm() const noexcept { return xm_; }

  /// {x in X^m : d(p^i, x) >= eps and d(x, p^j) >= eps for some i, j <= m}.
  PointSet cover(double eps) const;

  bool contains(PointIndex x) const noexcept { return member_[x] != 0; }

 private:
  std::size_t m_ = 0;
  PointSet xm_;
  std::vector<char> member_;
  std::vector<double> from_anchor_;  // max_i d(p^i, x)
  std::vector<double> to_anchor_;    // max_j d(x, p^j)
};

Truncation truncation(const SequencedSpace& seq_space, std::size_t m);

/// l = d on K and -inf off K. Requires I within K within J, K reflexive and transitive.
TimeSeparation to_time_separation(const FiniteLorentzSpace& space, const Relation& k);

/// Inverse of to_time_separation: d = max(l, 0) and K = {l > -inf}.
std::pair<FiniteLorentzSpace, Relation> from_time_separation(const TimeSeparation& ts);

/// l(x,z) >= l(x,y) + l(y,z) - tol with -inf absorbing; witness (x, y, z).
Check extended_reverse_triangle(const TimeSeparation& ts);

}  // namespace lms

#endif  // LMS_CORE_HPP
