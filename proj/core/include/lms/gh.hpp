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

#ifndef LMS_GH_HPP
#define LMS_GH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lms/relation.hpp"
#include "lms/space.hpp"

namespace lms {

using IndexPair = std::pair<PointIndex, PointIndex>;

/// A relation between two sequenced spaces, tagged with the order m and the
/// budget eps it is meant to satisfy.
struct QuasiCorrespondence {
  std::vector<IndexPair> pairs;  // sorted, duplicate-free
  std::size_t m = 1;
  double eps = 0.0;
  std::size_t left_size = 0;
  std::size_t right_size = 0;

  /// Sorts and deduplicates `pairs`.
  void normalize();
  PointSet left() const;   // R1
  PointSet right() const;  // R2
};

QuasiCorrespondence make_qc(std::vector<IndexPair> pairs, std::size_t m, double eps,
                            std::size_t left_size, std::size_t right_size);

struct DistortionWitness {
  double value = 0.0;
  IndexPair first;
  IndexPair second;
};

/// max over pairs (x,x'), (y,y') of |d(x,y) - d'(x',y')|. Throws on empty pairs.
double distortion(const FiniteLorentzSpace& x, const FiniteLorentzSpace& y,
                  const std::vector<IndexPair>& pairs);
DistortionWitness distortion_witness(const FiniteLorentzSpace& x, const FiniteLorentzSpace& y,
                                     const std::vector<IndexPair>& pairs);

struct QcReport {
  Check within_truncations;  // witness (x, x') outside X^m x X'^m
  Check cover1;              // witness: uncovered point of I_eps(p^1..p^m)
  Check cover2;
  bool distortion_ok = true;
  DistortionWitness distortion;
  Check anchors;  // witness: the missing r

  bool ok() const noexcept {
    return within_truncations.ok && cover1.ok && cover2.ok && distortion_ok && anchors.ok;
  }
};

/// Checks every condition of an (m, eps) quasi-correspondence. Throws only if
/// m exceeds a sequence length or indices are out of range.
QcReport verify_qc(const SequencedSpace& x, const SequencedSpace& y,
                   const QuasiCorrespondence& qc);

QuasiCorrespondence transpose_qc(const QuasiCorrespondence& qc);

/// R' o R with order m and budget eps + eps'. Throws on mismatched orders or
/// middle spaces.
QuasiCorrespondence compose_qc(const QuasiCorrespondence& first,
                               const QuasiCorrespondence& second);

struct RestrictedQc {
  QuasiCorrespondence qc;
  SequencedSpace left;
  SequencedSpace right;
};

/// Keeps anchors r_1 < ... < r_l (1-based) followed by every anchor after r_l,
/// and intersects qc with the new truncations of order l. Throws if the new
/// anchors leave uncovered a point the old ones covered.
RestrictedQc restrict_qc(const SequencedSpace& x, const SequencedSpace& y,
                         const QuasiCorrespondence& qc, const std::vector<std::size_t>& selection);

enum class SearchStatus { found, certified_infeasible, budget_exhausted };

std::string_view to_string(SearchStatus status) noexcept;

struct SearchOptions {
  std::size_t budget = 1'000'000;  // branch-and-bound nodes
  std::size_t exact_limit = 12;    // largest cover set searched exactly from the start
};

struct SearchResult {
  SearchStatus status = SearchStatus::budget_exhausted;
  std::optional<QuasiCorrespondence> best;
  /// True when the search space was exhausted: `best` is then optimal, or no
  /// (m, eps) quasi-correspondence exists.
  bool exhaustive = false;
  std::size_t nodes = 0;
  std::string method;  // "exact", "heuristic" or "heuristic+exact"
};

/// Looks for an (m, eps) quasi-correspondence of least distortion.
SearchResult search_qc(const SequencedSpace& x, const SequencedSpace& y, std::size_t m, double eps,
                       const SearchOptions& options = {});

/// Lexicographically first distance-preserving bijection fixing the anchors
/// (phi(p^k) = p'^k), or none.
std::optional<std::vector<PointIndex>> isomorphism_search(const SequencedSpace& x,
                                                          const SequencedSpace& y);

struct GHSchedule {
  std::vector<double> deltas;             // delta_m for m = 1, 2, ...
  std::vector<std::size_t> thresholds;    // N_m; empty selects them adaptively

  /// delta_m = 2^-m for m = 1..m_max with adaptive thresholds.
  static GHSchedule dyadic(std::size_t m_max);
  /// Throws unless deltas are positive and decreasing, thresholds increasing,
  /// and both cover m_max.
  void validate(std::size_t m_max) const;
};

enum class CellStatus { pass, certified_fail, uncertified_fail, provider_error };
enum class Verdict { consistent, refuted, inconclusive };

std::string_view to_string(CellStatus status) noexcept;
std::string_view to_string(Verdict verdict) noexcept;

struct CertifyCell {
  std::size_t n = 0;
  std::size_t m = 0;
  double delta = 0.0;
  CellStatus status = CellStatus::provider_error;
  std::optional<double> distortion;
  std::string method;  // "pairing", "search" or empty
  std::string message;
};

/// Builds candidate pairs for X_n against the target; the certifier trims them
/// to the truncations and adds anchor pairs before verifying.
using PairingFn = std::function<std::vector<IndexPair>(
    std::size_t n, const SequencedSpace& xn, const SequencedSpace& target, std::size_t m)>;
using SpaceProvider = std::function<SequencedSpace(std::size_t n)>;

struct CertifyOptions {
  std::size_t m_max = 1;
  std::vector<std::size_t> probes;  // increasing family indices
  PairingFn pairing;                // empty: always search
  bool search_fallback = true;      // search when the pairing fails to verify
  SearchOptions search;
};

struct CertifyResult {
  std::vector<CertifyCell> cells;  // ordered by m, then n
  /// N_m per m (1-based in position m-1); empty when no probe suffices.
  std::vector<std::optional<std::size_t>> thresholds;
  Verdict verdict = Verdict::inconclusive;
  std::string summary;
};

/// Tabulates (m, delta_m) quasi-correspondences between X_n and the target
/// over the probes. Consistent: every m passes from its threshold on.
/// Refuted: a cell at or past its threshold (the last probe when adaptive)
/// fails with a certificate. Inconclusive otherwise.
CertifyResult certify_gh_convergence(const SpaceProvider& provider, const SequencedSpace& target,
                                     const GHSchedule& schedule, const CertifyOptions& options);

}  // namespace lms

#endif  // LMS_GH_HPP
