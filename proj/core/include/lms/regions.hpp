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

#ifndef LMS_REGIONS_HPP
#define LMS_REGIONS_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "lms/space.hpp"

namespace lms {

/// I0(Y): points of Y at distance <= tol to and from every point of Y.
PointSet spacelike_kernel(const FiniteLorentzSpace& space, const PointSet& region);

/// Distance quotient of a region: indistinguishability classes of its ring.
struct QuotientSpace {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  PointSet region;
  PointSet kernel;
  PointSet ring;
  /// Classes ordered by representative; each is sorted and its front is the representative.
  std::vector<PointSet> classes;
  /// Class id per parent point, npos outside the ring.
  std::vector<std::size_t> class_index;
  /// Labels "C0", "C1", ... with distances between representatives.
  FiniteLorentzSpace space;

  /// Throws if x is not a ring point.
  std::size_t class_of(PointIndex x) const;
  PointIndex representative(std::size_t c) const { return classes.at(c).front(); }
};

/// Builds the quotient. Throws on an empty region, or if indistinguishability
/// within tol fails to be transitive on the ring (classes would be ill-defined).
QuotientSpace quotient(const FiniteLorentzSpace& space, const PointSet& region);

struct NestingReport {
  bool included = false;  // [x]_{Y'} is a subset of [x]_Y
  bool strict = false;    // and a proper one
  PointSet inner;         // [x]_{Y'}
  PointSet outer;         // [x]_Y
};

/// Compares the class of x in the Y'-quotient with its class in the Y-quotient.
/// Throws unless p << x << q, p and q lie in Y, and I(p,q) within Y within Y'.
NestingReport nesting_check(const FiniteLorentzSpace& space, const PointSet& y,
                            const PointSet& y_prime, PointIndex x, PointIndex p, PointIndex q);

struct NestedClass {
  PointSet region;  // Y_n
  PointSet cls;     // y_n, a class of quotient(Y_n)
};

/// Recovers the point determined by a nested family of classes along an
/// increasing exhaustion ending at the whole space. Throws if the hypotheses
/// fail or the intersection of the classes is not a single point.
PointIndex reconstruct(const FiniteLorentzSpace& space, const std::vector<NestedClass>& family);

}  // namespace lms

#endif  // LMS_REGIONS_HPP
