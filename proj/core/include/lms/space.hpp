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

#ifndef LMS_SPACE_HPP
#define LMS_SPACE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lms/matrix.hpp"

namespace lms {

inline constexpr double kDefaultTolerance = 1e-9;

/// A finite set of labeled points with a nonnegative Lorentzian distance d.
///
/// All order comparisons derived from the space (chronology, causality,
/// indistinguishability) use the single absolute tolerance `tol()`.
/// Construction validates the matrix: square, finite, nonnegative, and with a
/// diagonal within `tol` of zero (the diagonal is then stored as exact zero).
class FiniteLorentzSpace {
 public:
  FiniteLorentzSpace() = default;
  FiniteLorentzSpace(std::vector<std::string> labels, SquareMatrix<double> dist,
                     double tol = kDefaultTolerance);
  FiniteLorentzSpace(std::vector<std::string> labels,
                     const std::vector<std::vector<double>>& rows,
                     double tol = kDefaultTolerance);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  double d(PointIndex x, PointIndex y) const noexcept { return dist_(x, y); }
  double operator()(PointIndex x, PointIndex y) const noexcept { return dist_(x, y); }
  const SquareMatrix<double>& distances() const noexcept { return dist_; }

  double tol() const noexcept { return tol_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(PointIndex x) const { return labels_.at(x); }
  std::optional<PointIndex> find(std::string_view label) const;

  /// x << y, i.e. d(x,y) > tol.
  bool precedes(PointIndex x, PointIndex y) const noexcept { return dist_(x, y) > tol_; }

  /// Subspace on `points` (in the given order) with the same tolerance.
  FiniteLorentzSpace restricted_to(const std::vector<PointIndex>& points) const;

  /// The time-reversed space d'(x,y) = d(y,x).
  FiniteLorentzSpace reversed() const;

  PointSet all_points() const;

 private:
  std::vector<std::string> labels_;
  SquareMatrix<double> dist_;
  double tol_ = kDefaultTolerance;
};

/// A space with an ordered list of anchor points p^1, p^2, ... (repetitions allowed).
///
/// When `total` is set the truncations X^m are the whole space for every m.
/// This is how spaces with a chronological boundary (every finite space with a
/// positive distance) are run through formulas that assume a generating
/// sequence.
class SequencedSpace {
 public:
  SequencedSpace() = default;
  SequencedSpace(FiniteLorentzSpace space, std::vector<PointIndex> seq, bool total = false);

  const FiniteLorentzSpace& space() const noexcept { return space_; }
  const std::vector<PointIndex>& seq() const noexcept { return seq_; }
  std::size_t length() const noexcept { return seq_.size(); }
  bool total() const noexcept { return total_; }

  /// p^k with k counted from 1.
  PointIndex anchor(std::size_t k) const { return seq_.at(k - 1); }

 private:
  FiniteLorentzSpace space_;
  std::vector<PointIndex> seq_;
  bool total_ = false;
};

/// Time separation l with values in {-inf} U [0, inf); -inf marks pairs outside K.
struct TimeSeparation {
  std::vector<std::string> labels;
  SquareMatrix<double> l;
  double tol = kDefaultTolerance;
};

PointSet make_point_set(std::vector<PointIndex> points);

}  // namespace lms

#endif  // LMS_SPACE_HPP
