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

#include "lms/regions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace lms {

namespace {

void require_region(const FiniteLorentzSpace& space, const PointSet& region) {
  if (region.empty()) {
    throw InvalidInput("region must be nonempty");
  }
  for (std::size_t i = 0; i < region.size(); ++i) {
    if (region[i] >= space.size()) {
      throw InvalidInput("region index out of range");
    }
    if (i > 0 && region[i] <= region[i - 1]) {
      throw InvalidInput("region must be sorted and duplicate-free");
    }
  }
}

bool contains(const PointSet& s, PointIndex x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool same_on(const FiniteLorentzSpace& s, const PointSet& ring, PointIndex x, PointIndex y) {
  for (PointIndex z : ring) {
    if (std::abs(s(x, z) - s(y, z)) > s.tol() || std::abs(s(z, x) - s(z, y)) > s.tol()) {
      return false;
    }
  }
  return true;
}

// I(p,q) = {x : p << x << q}.
PointSet diamond(const FiniteLorentzSpace& space, PointIndex p, PointIndex q) {
  PointSet out;
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (space.precedes(p, x) && space.precedes(x, q)) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

PointSet spacelike_kernel(const FiniteLorentzSpace& space, const PointSet& region) {
  require_region(space, region);
  PointSet kernel;
  for (PointIndex y : region) {
    const bool isolated = std::all_of(region.begin(), region.end(), [&](PointIndex x) {
      return space(x, y) <= space.tol() && space(y, x) <= space.tol();
    });
    if (isolated) {
      kernel.push_back(y);
    }
  }
  return kernel;
}

std::size_t QuotientSpace::class_of(PointIndex x) const {
  if (x >= class_index.size() || class_index[x] == npos) {
    throw InvalidInput("point " + std::to_string(x) + " is not in the ring of the region");
  }
  return class_index[x];
}

QuotientSpace quotient(const FiniteLorentzSpace& space, const PointSet& region) {
  QuotientSpace q;
  q.region = region;
  q.kernel = spacelike_kernel(space, region);
  std::set_difference(region.begin(), region.end(), q.kernel.begin(), q.kernel.end(),
                      std::back_inserter(q.ring));
  q.class_index.assign(space.size(), QuotientSpace::npos);

  for (PointIndex x : q.ring) {
    if (q.class_index[x] != QuotientSpace::npos) {
      continue;
    }
    const std::size_t id = q.classes.size();
    q.classes.push_back({x});
    q.class_index[x] = id;
    for (PointIndex y : q.ring) {
      if (y > x && q.class_index[y] == QuotientSpace::npos && same_on(space, q.ring, x, y)) {
        q.classes.back().push_back(y);
        q.class_index[y] = id;
      }
    }
  }

  // With exact data the greedy pass is the partition; near-ties can break
  // transitivity, which would make the class distances depend on the representative.
  for (PointIndex x : q.ring) {
    for (PointIndex y : q.ring) {
      if (y > x && same_on(space, q.ring, x, y) != (q.class_index[x] == q.class_index[y])) {
        std::ostringstream msg;
        msg << "indistinguishability is not transitive at tol " << space.tol() << " (points "
            << space.label(x) << ", " << space.label(y) << ")";
        throw InvalidInput(msg.str());
      }
    }
  }

  const std::size_t k = q.classes.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  SquareMatrix<double> qdist(k);
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back("C" + std::to_string(a));
    for (std::size_t b = 0; b < k; ++b) {
      qdist(a, b) = a == b ? 0.0 : space(q.representative(a), q.representative(b));
    }
  }
  q.space = FiniteLorentzSpace(std::move(labels), std::move(qdist), space.tol());
  return q;
}

NestingReport nesting_check(const FiniteLorentzSpace& space, const PointSet& y,
                            const PointSet& y_prime, PointIndex x, PointIndex p, PointIndex q) {
  require_region(space, y);
  require_region(space, y_prime);
  if (x >= space.size() || p >= space.size() || q >= space.size()) {
    throw InvalidInput("nesting_check index out of range");
  }
  if (!space.precedes(p, x) || !space.precedes(x, q)) {
    throw InvalidInput("nesting_check requires p << x << q");
  }
  if (!contains(y, p) || !contains(y, q)) {
    throw InvalidInput("nesting_check requires p and q in Y");
  }
  if (!is_subset(diamond(space, p, q), y)) {
    throw InvalidInput("nesting_check requires I(p,q) within Y");
  }
  if (!is_subset(y, y_prime)) {
    throw InvalidInput("nesting_check requires Y within Y'");
  }
  const QuotientSpace outer = quotient(space, y);
  const QuotientSpace inner = quotient(space, y_prime);
  NestingReport report;
  report.outer = outer.classes[outer.class_of(x)];
  report.inner = inner.classes[inner.class_of(x)];
  report.included = is_subset(report.inner, report.outer);
  report.strict = report.included && report.inner.size() < report.outer.size();
  return report;
}

PointIndex reconstruct(const FiniteLorentzSpace& space, const std::vector<NestedClass>& family) {
  if (family.empty()) {
    throw InvalidInput("reconstruct needs at least one level");
  }
  for (std::size_t n = 0; n < family.size(); ++n) {
    const NestedClass& level = family[n];
    require_region(space, level.region);
    if (n > 0 && !is_subset(family[n - 1].region, level.region)) {
      throw InvalidInput("regions are not increasing at level " + std::to_string(n + 1));
    }
    const QuotientSpace q = quotient(space, level.region);
    if (level.cls.empty() || !contains(level.region, level.cls.front()) ||
        q.class_index[level.cls.front()] == QuotientSpace::npos ||
        q.classes[q.class_index[level.cls.front()]] != level.cls) {
      throw InvalidInput("level " + std::to_string(n + 1) + " is not a class of its region");
    }
    if (n > 0 && !is_subset(level.cls, family[n - 1].cls)) {
      throw InvalidInput("classes are not nested at level " + std::to_string(n + 1));
    }
  }
  if (family.back().region.size() != space.size()) {
    throw InvalidInput("the exhaustion does not reach the whole space");
  }

  const NestedClass& first = family.front();
  bool framed = false;
  for (PointIndex p : first.region) {
    for (PointIndex q : first.region) {
      if (!framed && is_subset(first.cls, diamond(space, p, q))) {
        framed = true;
      }
    }
  }
  if (!framed) {
    throw InvalidInput("the first class is not contained in any I(p,q) with p, q in Y_1");
  }

  const PointSet& last = family.back().cls;
  if (last.size() != 1) {
    throw InvalidInput("nested classes intersect in " + std::to_string(last.size()) +
                       " points, expected exactly one");
  }
  return last.front();
}

}  // namespace lms
