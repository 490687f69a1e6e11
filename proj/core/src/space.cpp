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

#include "lms/space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace lms {

namespace {

SquareMatrix<double> from_rows(const std::vector<std::vector<double>>& rows) {
  SquareMatrix<double> m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      std::ostringstream msg;
      msg << "distance matrix is not square: row " << i << " has " << rows[i].size()
          << " entries, expected " << rows.size();
      throw InvalidInput(msg.str());
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

}  // namespace

FiniteLorentzSpace::FiniteLorentzSpace(std::vector<std::string> labels,
                                       const std::vector<std::vector<double>>& rows, double tol)
    : FiniteLorentzSpace(std::move(labels), from_rows(rows), tol) {}

FiniteLorentzSpace::FiniteLorentzSpace(std::vector<std::string> labels, SquareMatrix<double> dist,
                                       double tol)
    : labels_(std::move(labels)), dist_(std::move(dist)), tol_(tol) {
  if (!(tol_ >= 0.0) || !std::isfinite(tol_)) {
    throw InvalidInput("tolerance must be a finite nonnegative number");
  }
  if (dist_.size() != labels_.size()) {
    std::ostringstream msg;
    msg << "distance matrix side " << dist_.size() << " does not match " << labels_.size()
        << " labels";
    throw InvalidInput(msg.str());
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InvalidInput("duplicate label '" + label + "'");
    }
  }
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = dist_(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream msg;
        msg << "d[" << i << "][" << j << "] = " << v << " is not a finite nonnegative number";
        throw InvalidInput(msg.str());
      }
    }
    if (dist_(i, i) > tol_) {
      std::ostringstream msg;
      msg << "d[" << i << "][" << i << "] = " << dist_(i, i) << " exceeds tolerance " << tol_;
      throw InvalidInput(msg.str());
    }
    dist_(i, i) = 0.0;
  }
}

std::optional<PointIndex> FiniteLorentzSpace::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<PointIndex>(it - labels_.begin());
}

FiniteLorentzSpace FiniteLorentzSpace::restricted_to(const std::vector<PointIndex>& points) const {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  SquareMatrix<double> dist(points.size());
  for (std::size_t a = 0; a < points.size(); ++a) {
    labels.push_back(label(points[a]));
    for (std::size_t b = 0; b < points.size(); ++b) {
      dist(a, b) = dist_(points[a], points[b]);
    }
  }
  return FiniteLorentzSpace(std::move(labels), std::move(dist), tol_);
}

FiniteLorentzSpace FiniteLorentzSpace::reversed() const {
  return FiniteLorentzSpace(labels_, dist_.transposed(), tol_);
}

PointSet FiniteLorentzSpace::all_points() const {
  PointSet all(size());
  std::iota(all.begin(), all.end(), PointIndex{0});
  return all;
}

SequencedSpace::SequencedSpace(FiniteLorentzSpace space, std::vector<PointIndex> seq, bool total)
    : space_(std::move(space)), seq_(std::move(seq)), total_(total) {
  if (seq_.empty()) {
    throw InvalidInput("generating sequence must not be empty");
  }
  for (PointIndex p : seq_) {
    if (p >= space_.size()) {
      std::ostringstream msg;
      msg << "sequence index " << p << " out of range for a space of " << space_.size()
          << " points";
      throw InvalidInput(msg.str());
    }
  }
}

PointSet make_point_set(std::vector<PointIndex> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace lms
