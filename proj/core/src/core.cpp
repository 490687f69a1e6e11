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

#include "lms/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lms {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

bool distinguished(const FiniteLorentzSpace& s, PointIndex x, PointIndex y) {
  for (PointIndex z = 0; z < s.size(); ++z) {
    if (std::abs(s(x, z) - s(y, z)) > s.tol() || std::abs(s(z, x) - s(z, y)) > s.tol()) {
      return true;
    }
  }
  return false;
}

void require_same_size(const FiniteLorentzSpace& space, const Relation& r, const char* what) {
  if (r.size() != space.size()) {
    std::ostringstream msg;
    msg << what << " has " << r.size() << " points but the space has " << space.size();
    throw InvalidInput(msg.str());
  }
}

}  // namespace

AxiomReport validate_axioms(const FiniteLorentzSpace& space) {
  AxiomReport report;
  const std::size_t n = space.size();
  const double tol = space.tol();
  for (PointIndex x = 0; x < n && report.reverse_triangle.ok; ++x) {
    for (PointIndex y = 0; y < n && report.reverse_triangle.ok; ++y) {
      if (space(x, y) <= tol) {
        continue;
      }
      for (PointIndex z = 0; z < n; ++z) {
        if (space(y, z) > tol && space(x, z) < space(x, y) + space(y, z) - tol) {
          report.reverse_triangle = {false, {x, y, z}};
          break;
        }
      }
    }
  }
  for (PointIndex x = 0; x < n && report.distinguishing.ok; ++x) {
    for (PointIndex y = x + 1; y < n; ++y) {
      if (!distinguished(space, x, y)) {
        report.distinguishing = {false, {x, y}};
        break;
      }
    }
  }
  return report;
}

Relation chronology(const FiniteLorentzSpace& space) {
  Relation r(space.size(), RelationKind::chronology);
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      r.set(x, y, space.precedes(x, y));
    }
  }
  return r;
}

Relation chronology_eps(const FiniteLorentzSpace& space, double eps) {
  if (!(eps > 0.0)) {
    throw InvalidInput("eps must be positive");
  }
  Relation r(space.size(), RelationKind::chronology_eps, eps);
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      r.set(x, y, space(x, y) >= eps);
    }
  }
  return r;
}

Relation causality(const FiniteLorentzSpace& space) {
  const std::size_t n = space.size();
  const double tol = space.tol();
  Relation r(n, RelationKind::causal);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      bool related = true;
      for (PointIndex p = 0; p < n && related; ++p) {
        related = space(p, y) >= space(p, x) - tol && space(x, p) >= space(y, p) - tol;
      }
      r.set(x, y, related);
    }
  }
  return r;
}

CausalReport check_causal_properties(const FiniteLorentzSpace& space) {
  const std::size_t n = space.size();
  const double tol = space.tol();
  const Relation i = chronology(space);
  const Relation j = causality(space);

  CausalReport report;
  report.reflexive = j.reflexive();
  report.transitive = j.transitive();
  report.antisymmetric = j.antisymmetric();
  report.i_subset_j = i.subset_of(j);

  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (!j(x, y)) {
        continue;
      }
      for (PointIndex z = 0; z < n; ++z) {
        if (!j(y, z)) {
          continue;
        }
        if (report.push_up.ok && (i(x, y) || i(y, z)) && !i(x, z)) {
          report.push_up = {false, {x, y, z}};
        }
        if (report.causal_additivity.ok && space(x, y) + space(y, z) > space(x, z) + 2.0 * tol) {
          report.causal_additivity = {false, {x, y, z}};
        }
      }
    }
  }
  return report;
}

Boundaries boundaries(const FiniteLorentzSpace& space) {
  const std::size_t n = space.size();
  Boundaries b;
  for (PointIndex x = 0; x < n; ++x) {
    bool has_future = false;
    bool has_past = false;
    for (PointIndex y = 0; y < n; ++y) {
      has_future = has_future || space.precedes(x, y);
      has_past = has_past || space.precedes(y, x);
    }
    if (!has_future) {
      b.future.push_back(x);
    }
    if (!has_past) {
      b.past.push_back(x);
    }
    if (has_future && has_past) {
      b.interior.push_back(x);
    }
  }
  return b;
}

PointSet hull(const FiniteLorentzSpace& space, const PointSet& a, const Relation& relation) {
  if (a.empty()) {
    throw InvalidInput("hull of an empty set is undefined");
  }
  require_same_size(space, relation, "relation");
  PointSet out;
  for (PointIndex x = 0; x < space.size(); ++x) {
    bool after = false;
    bool before = false;
    for (PointIndex p : a) {
      if (p >= space.size()) {
        throw InvalidInput("hull input index out of range");
      }
      after = after || relation(p, x);
      before = before || relation(x, p);
    }
    if (after && before) {
      out.push_back(x);
    }
  }
  return out;
}

GeneratingCheck is_generating(const FiniteLorentzSpace& space, const PointSet& s) {
  GeneratingCheck result;
  for (PointIndex x = 0; x < space.size(); ++x) {
    bool past = false;
    bool future = false;
    for (PointIndex p : s) {
      past = past || space.precedes(p, x);
      future = future || space.precedes(x, p);
    }
    if (!(past && future)) {
      result.ok = false;
      result.uncovered.push_back(x);
    }
  }
  return result;
}

Truncation::Truncation(const SequencedSpace& seq_space, std::size_t m) : m_(m) {
  if (m == 0 || m > seq_space.length()) {
    std::ostringstream msg;
    msg << "truncation order " << m << " outside [1, " << seq_space.length() << "]";
    throw InvalidInput(msg.str());
  }
  const FiniteLorentzSpace& space = seq_space.space();
  const std::size_t n = space.size();
  member_.assign(n, 0);
  from_anchor_.assign(n, 0.0);
  to_anchor_.assign(n, 0.0);
  for (std::size_t k = 1; k <= m; ++k) {
    const PointIndex p = seq_space.anchor(k);
    member_[p] = 1;
    for (PointIndex x = 0; x < n; ++x) {
      from_anchor_[x] = std::max(from_anchor_[x], space(p, x));
      to_anchor_[x] = std::max(to_anchor_[x], space(x, p));
    }
  }
  for (PointIndex x = 0; x < n; ++x) {
    if (seq_space.total() || (from_anchor_[x] > space.tol() && to_anchor_[x] > space.tol())) {
      member_[x] = 1;
    }
    if (member_[x]) {
      xm_.push_back(x);
    }
  }
}

PointSet Truncation::cover(double eps) const {
  PointSet out;
  for (PointIndex x : xm_) {
    if (from_anchor_[x] >= eps && to_anchor_[x] >= eps) {
      out.push_back(x);
    }
  }
  return out;
}

Truncation truncation(const SequencedSpace& seq_space, std::size_t m) {
  return Truncation(seq_space, m);
}

TimeSeparation to_time_separation(const FiniteLorentzSpace& space, const Relation& k) {
  require_same_size(space, k, "relation K");
  if (auto c = chronology(space).subset_of(k); !c) {
    throw InvalidInput("K does not contain I: missing pair (" + space.label(c.witness[0]) + ", " +
                       space.label(c.witness[1]) + ")");
  }
  if (auto c = k.subset_of(causality(space)); !c) {
    throw InvalidInput("K is not contained in J: extra pair (" + space.label(c.witness[0]) +
                       ", " + space.label(c.witness[1]) + ")");
  }
  if (auto c = k.reflexive(); !c) {
    throw InvalidInput("K is not reflexive at " + space.label(c.witness[0]));
  }
  if (auto c = k.transitive(); !c) {
    throw InvalidInput("K is not transitive");
  }
  TimeSeparation ts{space.labels(), SquareMatrix<double>(space.size()), space.tol()};
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      ts.l(x, y) = k(x, y) ? space(x, y) : kMinusInf;
    }
  }
  return ts;
}

Check extended_reverse_triangle(const TimeSeparation& ts) {
  const std::size_t n = ts.l.size();
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (ts.l(x, y) == kMinusInf) {
        continue;
      }
      for (PointIndex z = 0; z < n; ++z) {
        if (ts.l(y, z) == kMinusInf) {
          continue;
        }
        if (ts.l(x, z) < ts.l(x, y) + ts.l(y, z) - ts.tol) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

std::pair<FiniteLorentzSpace, Relation> from_time_separation(const TimeSeparation& ts) {
  const std::size_t n = ts.l.size();
  if (ts.labels.size() != n) {
    throw InvalidInput("time separation labels do not match the matrix side");
  }
  SquareMatrix<double> d(n);
  Relation k(n, RelationKind::custom);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      const double v = ts.l(x, y);
      if (std::isnan(v) || v == std::numeric_limits<double>::infinity() || (v < 0.0 && v != kMinusInf)) {
        std::ostringstream msg;
        msg << "l[" << x << "][" << y << "] = " << v << " is neither -inf nor a finite nonnegative number";
        throw InvalidInput(msg.str());
      }
      if (x != y && v > ts.tol && ts.l(y, x) > ts.tol) {
        std::ostringstream msg;
        msg << "l is positive in both directions between " << x << " and " << y;
        throw InvalidInput(msg.str());
      }
      k.set(x, y, v != kMinusInf);
      d(x, y) = std::max(v, 0.0);
    }
  }
  if (auto c = extended_reverse_triangle(ts); !c) {
    std::ostringstream msg;
    msg << "l violates the extended reverse triangle inequality at (" << c.witness[0] << ", "
        << c.witness[1] << ", " << c.witness[2] << ")";
    throw InvalidInput(msg.str());
  }
  return {FiniteLorentzSpace(ts.labels, std::move(d), ts.tol), std::move(k)};
}

}  // namespace lms
