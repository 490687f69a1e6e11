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

#ifndef LMS_TESTS_ORACLES_HPP
#define LMS_TESTS_ORACLES_HPP

// Independent reference implementations, written straight from the
// definitions with no shared code paths. Slow on purpose.

#include <optional>
#include <vector>

#include "lms/lms.hpp"

namespace lms::testing {

using BoolMatrix = std::vector<std::vector<bool>>;
using RealMatrix = std::vector<std::vector<double>>;

BoolMatrix oracle_chronology(const FiniteLorentzSpace& s);
BoolMatrix oracle_causal(const FiniteLorentzSpace& s);
bool to_bool_matrix_equal(const Relation& r, const BoolMatrix& m);

/// Series evaluated in long double, term by term.
std::vector<double> oracle_time(const FiniteLorentzSpace& s, const std::vector<PointIndex>& order);

/// Longest strict-J chain length from x to y by exhaustive chain enumeration.
RealMatrix oracle_dcheck(const FiniteLorentzSpace& s);

/// X^m straight from its definition.
std::vector<bool> oracle_xm(const SequencedSpace& ss, std::size_t m);

struct OracleQm {
  RealMatrix gamma;
  RealMatrix p;
};
/// Per-level sups recomputed from scratch, with the infinite tail summed term
/// by term until it stops changing the total.
OracleQm oracle_quasimetric(const SequencedSpace& ss);

double oracle_distortion(const FiniteLorentzSpace& x, const FiniteLorentzSpace& y,
                         const std::vector<std::pair<PointIndex, PointIndex>>& pairs);

/// Does an (m, eps) quasi-correspondence exist? Enumerates a partner in X'^m
/// for every cover point of X and a partner in X^m for every cover point of
/// X', on top of the anchor pairs. Any quasi-correspondence contains such a
/// selection, and the selection inherits its distortion bound.
bool oracle_qc_exists(const SequencedSpace& x, const SequencedSpace& y, std::size_t m, double eps);

/// Lexicographically first anchor-preserving isometry by trying every
/// permutation.
std::optional<std::vector<PointIndex>> oracle_isomorphism(const SequencedSpace& x,
                                                          const SequencedSpace& y);

}  // namespace lms::testing

#endif  // LMS_TESTS_ORACLES_HPP
