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

#include <algorithm>
#include <cmath>
#include <limits>

#include "lms/gh.hpp"

namespace lms {

namespace {

constexpr PointIndex kUnset = std::numeric_limits<PointIndex>::max();

struct Signature {
  std::vector<double> row;
  std::vector<double> col;
};

std::vector<Signature> signatures(const FiniteLorentzSpace& s) {
  std::vector<Signature> out(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) {
    for (PointIndex z = 0; z < s.size(); ++z) {
      out[x].row.push_back(s(x, z));
      out[x].col.push_back(s(z, x));
    }
    std::sort(out[x].row.begin(), out[x].row.end());
    std::sort(out[x].col.begin(), out[x].col.end());
  }
  return out;
}

bool close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) {
      return false;
    }
  }
  return true;
}

class Matcher {
 public:
  Matcher(const FiniteLorentzSpace& x, const FiniteLorentzSpace& y,
          std::vector<std::vector<PointIndex>> candidates)
      : x_(x), y_(y), tol_(std::max(x.tol(), y.tol())), candidates_(std::move(candidates)),
        phi_(x.size(), kUnset), used_(y.size(), 0) {}

  bool run(PointIndex v) {
    if (v == x_.size()) {
      return true;
    }
    for (PointIndex c : candidates_[v]) {
      if (used_[c] || !consistent(v, c)) {
        continue;
      }
      phi_[v] = c;
      used_[c] = 1;
      if (run(v + 1)) {
        return true;
      }
      phi_[v] = kUnset;
      used_[c] = 0;
    }
    return false;
  }

  const std::vector<PointIndex>& phi() const { return phi_; }

 private:
  bool consistent(PointIndex v, PointIndex c) const {
    for (PointIndex u = 0; u < v; ++u) {
      if (std::abs(x_(u, v) - y_(phi_[u], c)) > tol_ || std::abs(x_(v, u) - y_(c, phi_[u])) > tol_) {
        return false;
      }
    }
    return true;
  }

  const FiniteLorentzSpace& x_;
  const FiniteLorentzSpace& y_;
  double tol_;
  std::vector<std::vector<PointIndex>> candidates_;
  std::vector<PointIndex> phi_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<PointIndex>> isomorphism_search(const SequencedSpace& x,
                                                          const SequencedSpace& y) {
  const FiniteLorentzSpace& sx = x.space();
  const FiniteLorentzSpace& sy = y.space();
  if (sx.size() != sy.size() || x.length() != y.length()) {
    return std::nullopt;
  }
  const std::size_t n = sx.size();
  const double tol = std::max(sx.tol(), sy.tol());

  // Anchors are pinned; a point repeated in one sequence must repeat in step.
  std::vector<PointIndex> pinned(n, kUnset);
  for (std::size_t k = 1; k <= x.length(); ++k) {
    PointIndex& slot = pinned[x.anchor(k)];
    if (slot != kUnset && slot != y.anchor(k)) {
      return std::nullopt;
    }
    slot = y.anchor(k);
  }
  std::vector<char> pinned_target(n, 0);
  for (PointIndex v = 0; v < n; ++v) {
    if (pinned[v] != kUnset) {
      if (pinned_target[pinned[v]]) {
        return std::nullopt;
      }
      pinned_target[pinned[v]] = 1;
    }
  }

  const auto sig_x = signatures(sx);
  const auto sig_y = signatures(sy);
  std::vector<std::vector<PointIndex>> candidates(n);
  for (PointIndex v = 0; v < n; ++v) {
    for (PointIndex c = 0; c < n; ++c) {
      const bool allowed = pinned[v] != kUnset ? pinned[v] == c : !pinned_target[c];
      if (allowed && close(sig_x[v].row, sig_y[c].row, tol) &&
          close(sig_x[v].col, sig_y[c].col, tol)) {
        candidates[v].push_back(c);
      }
    }
    if (candidates[v].empty()) {
      return std::nullopt;
    }
  }
  Matcher matcher(sx, sy, std::move(candidates));
  if (!matcher.run(0)) {
    return std::nullopt;
  }
  return matcher.phi();
}

}  // namespace lms
