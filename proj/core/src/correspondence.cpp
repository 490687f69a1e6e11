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
#include <sstream>

#include "lms/core.hpp"
#include "lms/gh.hpp"

namespace lms {

namespace {

void check_sizes(const SequencedSpace& x, const SequencedSpace& y, const QuasiCorrespondence& qc) {
  if (qc.left_size != x.space().size() || qc.right_size != y.space().size()) {
    throw InvalidInput("quasi-correspondence does not match the sizes of its spaces");
  }
  for (const auto& [a, b] : qc.pairs) {
    if (a >= qc.left_size || b >= qc.right_size) {
      throw InvalidInput("quasi-correspondence pair out of range");
    }
  }
  if (qc.m == 0 || qc.m > x.length() || qc.m > y.length()) {
    std::ostringstream msg;
    msg << "order " << qc.m << " exceeds a sequence length (" << x.length() << ", " << y.length()
        << ")";
    throw InvalidInput(msg.str());
  }
}

Check covered(const PointSet& required, const PointSet& present) {
  for (PointIndex p : required) {
    if (!std::binary_search(present.begin(), present.end(), p)) {
      return {false, {p}};
    }
  }
  return {};
}

// Points the anchor set leaves uncovered; empty for total spaces.
PointSet uncovered_by(const SequencedSpace& s, const std::vector<PointIndex>& seq) {
  if (s.total()) {
    return {};
  }
  return is_generating(s.space(), make_point_set(seq)).uncovered;
}

SequencedSpace reselect(const SequencedSpace& s, const std::vector<std::size_t>& selection,
                        const char* side) {
  std::vector<PointIndex> seq;
  for (std::size_t r : selection) {
    seq.push_back(s.anchor(r));
  }
  for (std::size_t r = selection.back() + 1; r <= s.length(); ++r) {
    seq.push_back(s.anchor(r));
  }
  const PointSet before = uncovered_by(s, s.seq());
  const PointSet after = uncovered_by(s, seq);
  PointSet lost;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(lost));
  if (!lost.empty()) {
    std::ostringstream msg;
    msg << "selected " << side << " anchors no longer generate; uncovered:";
    for (PointIndex p : lost) {
      msg << ' ' << s.space().label(p);
    }
    throw InvalidInput(msg.str());
  }
  return SequencedSpace(s.space(), std::move(seq), s.total());
}

}  // namespace

void QuasiCorrespondence::normalize() {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

PointSet QuasiCorrespondence::left() const {
  PointSet out;
  for (const auto& p : pairs) {
    out.push_back(p.first);
  }
  return make_point_set(std::move(out));
}

PointSet QuasiCorrespondence::right() const {
  PointSet out;
  for (const auto& p : pairs) {
    out.push_back(p.second);
  }
  return make_point_set(std::move(out));
}

QuasiCorrespondence make_qc(std::vector<IndexPair> pairs, std::size_t m, double eps,
                            std::size_t left_size, std::size_t right_size) {
  QuasiCorrespondence qc{std::move(pairs), m, eps, left_size, right_size};
  qc.normalize();
  return qc;
}

DistortionWitness distortion_witness(const FiniteLorentzSpace& x, const FiniteLorentzSpace& y,
                                     const std::vector<IndexPair>& pairs) {
  if (pairs.empty()) {
    throw InvalidInput("distortion of an empty relation is undefined");
  }
  DistortionWitness w{0.0, pairs.front(), pairs.front()};
  for (const auto& a : pairs) {
    for (const auto& b : pairs) {
      const double gap = std::abs(x(a.first, b.first) - y(a.second, b.second));
      if (gap > w.value) {
        w = {gap, a, b};
      }
    }
  }
  return w;
}

double distortion(const FiniteLorentzSpace& x, const FiniteLorentzSpace& y,
                  const std::vector<IndexPair>& pairs) {
  return distortion_witness(x, y, pairs).value;
}

QcReport verify_qc(const SequencedSpace& x, const SequencedSpace& y,
                   const QuasiCorrespondence& qc) {
  check_sizes(x, y, qc);
  const Truncation tx(x, qc.m);
  const Truncation ty(y, qc.m);
  QcReport report;
  for (const auto& [a, b] : qc.pairs) {
    if (!tx.contains(a) || !ty.contains(b)) {
      report.within_truncations = {false, {a, b}};
      break;
    }
  }
  report.cover1 = covered(tx.cover(qc.eps), qc.left());
  report.cover2 = covered(ty.cover(qc.eps), qc.right());
  if (qc.pairs.empty()) {
    report.distortion_ok = false;
  } else {
    report.distortion = distortion_witness(x.space(), y.space(), qc.pairs);
    report.distortion_ok = report.distortion.value < qc.eps;
  }
  for (std::size_t r = 1; r <= qc.m; ++r) {
    const IndexPair anchor{x.anchor(r), y.anchor(r)};
    if (!std::binary_search(qc.pairs.begin(), qc.pairs.end(), anchor)) {
      report.anchors = {false, {r}};
      break;
    }
  }
  return report;
}

QuasiCorrespondence transpose_qc(const QuasiCorrespondence& qc) {
  std::vector<IndexPair> pairs;
  pairs.reserve(qc.pairs.size());
  for (const auto& [a, b] : qc.pairs) {
    pairs.emplace_back(b, a);
  }
  return make_qc(std::move(pairs), qc.m, qc.eps, qc.right_size, qc.left_size);
}

QuasiCorrespondence compose_qc(const QuasiCorrespondence& first,
                               const QuasiCorrespondence& second) {
  if (first.m != second.m) {
    throw InvalidInput("cannot compose quasi-correspondences of different orders");
  }
  if (first.right_size != second.left_size) {
    throw InvalidInput("quasi-correspondences do not share a middle space");
  }
  std::vector<IndexPair> pairs;
  for (const auto& [a, b] : first.pairs) {
    auto it = std::lower_bound(second.pairs.begin(), second.pairs.end(), IndexPair{b, 0});
    for (; it != second.pairs.end() && it->first == b; ++it) {
      pairs.emplace_back(a, it->second);
    }
  }
  return make_qc(std::move(pairs), first.m, first.eps + second.eps, first.left_size,
                 second.right_size);
}

RestrictedQc restrict_qc(const SequencedSpace& x, const SequencedSpace& y,
                         const QuasiCorrespondence& qc, const std::vector<std::size_t>& selection) {
  check_sizes(x, y, qc);
  if (selection.empty()) {
    throw InvalidInput("selection must name at least one anchor");
  }
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i] == 0 || (i > 0 && selection[i] <= selection[i - 1])) {
      throw InvalidInput("selection must be strictly increasing and 1-based");
    }
  }
  if (selection.back() > qc.m) {
    throw InvalidInput("selection exceeds the order of the quasi-correspondence");
  }
  RestrictedQc out{{}, reselect(x, selection, "left"), reselect(y, selection, "right")};
  const std::size_t l = selection.size();
  const Truncation tx(out.left, l);
  const Truncation ty(out.right, l);
  std::vector<IndexPair> pairs;
  for (const auto& [a, b] : qc.pairs) {
    if (tx.contains(a) && ty.contains(b)) {
      pairs.emplace_back(a, b);
    }
  }
  out.qc = make_qc(std::move(pairs), l, qc.eps, qc.left_size, qc.right_size);
  return out;
}

}  // namespace lms
