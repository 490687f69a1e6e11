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

#ifndef LMS_RELATION_HPP
#define LMS_RELATION_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "lms/matrix.hpp"

namespace lms {

enum class RelationKind { chronology, chronology_eps, causal, custom };

std::string_view to_string(RelationKind kind) noexcept;

/// Outcome of an exhaustive property check. `witness` holds the
/// lexicographically first offending tuple when `ok` is false.
struct Check {
  bool ok = true;
  std::vector<PointIndex> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Boolean n x n matrix over a point set, tagged with how it was produced.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n, RelationKind kind = RelationKind::custom, double eps = 0.0)
      : kind_(kind), eps_(eps), m_(n, 0) {}

  std::size_t size() const noexcept { return m_.size(); }
  RelationKind kind() const noexcept { return kind_; }
  double eps() const noexcept { return eps_; }

  bool contains(PointIndex x, PointIndex y) const noexcept { return m_(x, y) != 0; }
  bool operator()(PointIndex x, PointIndex y) const noexcept { return contains(x, y); }
  void set(PointIndex x, PointIndex y, bool value = true) noexcept { m_(x, y) = value ? 1 : 0; }

  std::vector<std::pair<PointIndex, PointIndex>> pairs() const;
  std::size_t count() const noexcept;

  /// Relation with the same tag and every pair reversed.
  Relation transposed() const;

  /// {(x,z) : exists y, (x,y) in *this and (y,z) in other}, tagged custom.
  Relation then(const Relation& other) const;

  Relation& unite(const Relation& other);

  /// First pair of *this missing from `other`.
  Check subset_of(const Relation& other) const;
  Check reflexive() const;
  Check irreflexive() const;
  Check transitive() const;
  /// Witness is the first pair x != y related in both directions.
  Check antisymmetric() const;

  /// Matrix equality; the tag is ignored.
  bool same_pairs(const Relation& other) const noexcept { return m_ == other.m_; }

 private:
  RelationKind kind_ = RelationKind::custom;
  double eps_ = 0.0;
  SquareMatrix<std::uint8_t> m_;
};

}  // namespace lms

#endif  // LMS_RELATION_HPP
