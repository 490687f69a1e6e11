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

#include "lms/relation.hpp"

namespace lms {

std::string_view to_string(RelationKind kind) noexcept {
  switch (kind) {
    case RelationKind::chronology:
      return "chronology";
    case RelationKind::chronology_eps:
      return "chronology_eps";
    case RelationKind::causal:
      return "causal";
    case RelationKind::custom:
      break;
  }
  return "custom";
}

std::vector<std::pair<PointIndex, PointIndex>> Relation::pairs() const {
  std::vector<std::pair<PointIndex, PointIndex>> out;
  for (PointIndex x = 0; x < size(); ++x) {
    for (PointIndex y = 0; y < size(); ++y) {
      if (contains(x, y)) {
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

std::size_t Relation::count() const noexcept {
  std::size_t c = 0;
  for (PointIndex x = 0; x < size(); ++x) {
    for (PointIndex y = 0; y < size(); ++y) {
      c += m_(x, y);
    }
  }
  return c;
}

Relation Relation::transposed() const {
  Relation out(size(), kind_, eps_);
  out.m_ = m_.transposed();
  return out;
}

Relation Relation::then(const Relation& other) const {
  if (other.size() != size()) {
    throw InvalidInput("cannot compose relations over different point sets");
  }
  const std::size_t n = size();
  Relation out(n);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (!contains(x, y)) {
        continue;
      }
      for (PointIndex z = 0; z < n; ++z) {
        if (other.contains(y, z)) {
          out.set(x, z);
        }
      }
    }
  }
  return out;
}

Relation& Relation::unite(const Relation& other) {
  if (other.size() != size()) {
    throw InvalidInput("cannot unite relations over different point sets");
  }
  for (PointIndex x = 0; x < size(); ++x) {
    for (PointIndex y = 0; y < size(); ++y) {
      if (other.contains(x, y)) {
        set(x, y);
      }
    }
  }
  kind_ = RelationKind::custom;
  return *this;
}

Check Relation::subset_of(const Relation& other) const {
  if (other.size() != size()) {
    throw InvalidInput("cannot compare relations over different point sets");
  }
  for (PointIndex x = 0; x < size(); ++x) {
    for (PointIndex y = 0; y < size(); ++y) {
      if (contains(x, y) && !other.contains(x, y)) {
        return {false, {x, y}};
      }
    }
  }
  return {};
}

Check Relation::reflexive() const {
  for (PointIndex x = 0; x < size(); ++x) {
    if (!contains(x, x)) {
      return {false, {x}};
    }
  }
  return {};
}

Check Relation::irreflexive() const {
  for (PointIndex x = 0; x < size(); ++x) {
    if (contains(x, x)) {
      return {false, {x}};
    }
  }
  return {};
}

Check Relation::transitive() const {
  const std::size_t n = size();
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (!contains(x, y)) {
        continue;
      }
      for (PointIndex z = 0; z < n; ++z) {
        if (contains(y, z) && !contains(x, z)) {
          return {false, {x, y, z}};
        }
      }
    }
  }
  return {};
}

Check Relation::antisymmetric() const {
  for (PointIndex x = 0; x < size(); ++x) {
    for (PointIndex y = x + 1; y < size(); ++y) {
      if (contains(x, y) && contains(y, x)) {
        return {false, {x, y}};
      }
    }
  }
  return {};
}

}  // namespace lms
