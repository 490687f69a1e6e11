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

#include "lms/quasimetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lms/core.hpp"
#include "lms/parallel.hpp"
#include "lms/timefn.hpp"

namespace lms {

QuasiMetricPair quasi_metrics(const SequencedSpace& seq_space) {
  const FiniteLorentzSpace& s = seq_space.space();
  const std::size_t n = s.size();
  const std::size_t levels = seq_space.length();
  constexpr double kLow = -std::numeric_limits<double>::infinity();

  // future(x,y) = sup_{z in X^m} d(y,z) - d(x,z); past(x,y) = sup d(z,x) - d(z,y).
  // X^m only grows with m, so the sups are updated with the new points.
  SquareMatrix<double> future(n, kLow);
  SquareMatrix<double> past(n, kLow);
  QuasiMetricPair out{SquareMatrix<double>(n, 0.0), SquareMatrix<double>(n, 0.0), levels,
                      "sum_{m=1}^{L} 2^-m g_m + 2^-L g_L"};
  std::vector<char> seen(n, 0);
  double weight = 1.0;
  for (std::size_t m = 1; m <= levels; ++m) {
    weight *= 0.5;
    PointSet fresh;
    const Truncation level = truncation(seq_space, m);
    for (PointIndex z : level.xm()) {
      if (!seen[z]) {
        seen[z] = 1;
        fresh.push_back(z);
      }
    }
    parallel_for(n, [&](std::size_t x) {
      for (PointIndex y = 0; y < n; ++y) {
        for (PointIndex z : fresh) {
          future(x, y) = std::max(future(x, y), s(y, z) - s(x, z));
          past(x, y) = std::max(past(x, y), s(z, x) - s(z, y));
        }
      }
    });
    // The last level also carries the closed-form tail of equal weight.
    const double w = m == levels ? 2.0 * weight : weight;
    parallel_for(n, [&](std::size_t x) {
      for (PointIndex y = 0; y < n; ++y) {
        if (x == y) {
          continue;
        }
        const double up = future(x, y);
        const double down = past(x, y);
        out.p(x, y) += w * (squash(std::max(up, 0.0)) + squash(std::max(down, 0.0)));
        const double sym_future = std::max(up, future(y, x));
        const double sym_past = std::max(down, past(y, x));
        out.gamma(x, y) += w * (squash(std::max(sym_future, 0.0)) + squash(std::max(sym_past, 0.0)));
      }
    });
  }
  return out;
}

SquareMatrix<double> kuratowski_gamma(const SequencedSpace& seq_space) {
  return quasi_metrics(seq_space).gamma;
}

SquareMatrix<double> quasi_metric_p(const SequencedSpace& seq_space) {
  return quasi_metrics(seq_space).p;
}

QmReport verify_qm_properties(const SequencedSpace& seq_space, const QmTolerances& tolerances) {
  return verify_qm_properties(seq_space, quasi_metrics(seq_space), tolerances);
}

QmReport verify_qm_properties(const SequencedSpace& seq_space, const QuasiMetricPair& qm,
                              const QmTolerances& tolerances) {
  const FiniteLorentzSpace& s = seq_space.space();
  const std::size_t n = s.size();
  const auto& p = qm.p;
  const auto& g = qm.gamma;
  QmReport report;
  report.triangle_slack = std::numeric_limits<double>::infinity();
  report.sandwich_slack = std::numeric_limits<double>::infinity();

  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      for (PointIndex z = 0; z < n; ++z) {
        const double slack = p(x, y) + p(y, z) - p(x, z);
        report.triangle_slack = std::min(report.triangle_slack, slack);
        if (report.p_triangle.ok && slack < -tolerances.triangle) {
          report.p_triangle = {false, {x, y, z}};
        }
        if (report.gamma_metric.ok && g(x, z) > g(x, y) + g(y, z) + tolerances.triangle) {
          report.gamma_metric = {false, {x, y, z}};
        }
      }
    }
  }

  const Relation j = causality(s);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      if (report.zero_set_equals_j.ok && (p(x, y) <= s.tol()) != j(x, y)) {
        report.zero_set_equals_j = {false, {x, y}};
      }
      const double sum = p(x, y) + p(y, x);
      const double slack = std::min(sum - g(x, y), 2.0 * g(x, y) - sum);
      report.sandwich_slack = std::min(report.sandwich_slack, slack);
      if (report.sandwich.ok && slack < -tolerances.sandwich) {
        report.sandwich = {false, {x, y}};
      }
      const bool symmetric = g(x, y) == g(y, x);
      const bool zero_exactly_on_diagonal = (x == y) == (g(x, y) == 0.0);
      if (report.gamma_metric.ok && (!symmetric || !zero_exactly_on_diagonal || g(x, y) < 0.0)) {
        report.gamma_metric = {false, {x, y}};
      }
    }
  }
  if (n == 0) {
    report.triangle_slack = 0.0;
    report.sandwich_slack = 0.0;
  }
  return report;
}

}  // namespace lms
