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

#ifndef LMS_QUASIMETRIC_HPP
#define LMS_QUASIMETRIC_HPP

#include <string>

#include "lms/relation.hpp"
#include "lms/space.hpp"

namespace lms {

/// gamma and p of a sequenced space. Both series run over m = 1..L with the
/// level-L term repeated for every m > L, i.e. 2^-L g_L is added once.
struct QuasiMetricPair {
  SquareMatrix<double> gamma;
  SquareMatrix<double> p;
  std::size_t seq_len = 0;
  std::string tail_rule;
};

QuasiMetricPair quasi_metrics(const SequencedSpace& seq_space);
SquareMatrix<double> kuratowski_gamma(const SequencedSpace& seq_space);
SquareMatrix<double> quasi_metric_p(const SequencedSpace& seq_space);

struct QmTolerances {
  double triangle = 1e-12;
  double sandwich = 1e-12;
};

struct QmReport {
  Check p_triangle;          // witness (x, y, z)
  Check zero_set_equals_j;   // witness (x, y)
  Check sandwich;            // witness (x, y)
  Check gamma_metric;        // witness (x, y) or (x, y, z)
  double triangle_slack = 0.0;  // min of p(x,y) + p(y,z) - p(x,z)
  double sandwich_slack = 0.0;  // min of both sandwich gaps

  bool ok() const noexcept {
    return p_triangle.ok && zero_set_equals_j.ok && sandwich.ok && gamma_metric.ok;
  }
};

/// Exhaustive checks of the stated relationships. The zero set of p is taken
/// as {p <= tol} with the space's tol.
QmReport verify_qm_properties(const SequencedSpace& seq_space, const QmTolerances& tolerances = {});
QmReport verify_qm_properties(const SequencedSpace& seq_space, const QuasiMetricPair& qm,
                              const QmTolerances& tolerances = {});

}  // namespace lms

#endif  // LMS_QUASIMETRIC_HPP
