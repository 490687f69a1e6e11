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
#include <exception>
#include <sstream>

#include "lms/core.hpp"
#include "lms/gh.hpp"

namespace lms {

namespace {

CertifyCell run_cell(std::size_t n, std::size_t m, double delta, const SequencedSpace& xn,
                     const SequencedSpace& target, const CertifyOptions& options) {
  CertifyCell cell{n, m, delta, CellStatus::uncertified_fail, std::nullopt, "", ""};
  if (m > xn.length() || m > target.length()) {
    cell.message = "sequence shorter than the order";
    return cell;
  }
  if (options.pairing) {
    cell.method = "pairing";
    const Truncation tx(xn, m);
    const Truncation ty(target, m);
    std::vector<IndexPair> pairs;
    for (const auto& [a, b] : options.pairing(n, xn, target, m)) {
      if (a < xn.space().size() && b < target.space().size() && tx.contains(a) &&
          ty.contains(b)) {
        pairs.emplace_back(a, b);
      }
    }
    for (std::size_t r = 1; r <= m; ++r) {
      pairs.emplace_back(xn.anchor(r), target.anchor(r));
    }
    const QuasiCorrespondence qc =
        make_qc(std::move(pairs), m, delta, xn.space().size(), target.space().size());
    const QcReport report = verify_qc(xn, target, qc);
    cell.distortion = report.distortion.value;
    if (report.ok()) {
      cell.status = CellStatus::pass;
      return cell;
    }
    cell.message = "pairing does not verify";
    if (!options.search_fallback) {
      return cell;
    }
  }
  cell.method = "search";
  const SearchResult found = search_qc(xn, target, m, delta, options.search);
  switch (found.status) {
    case SearchStatus::found:
      cell.status = CellStatus::pass;
      cell.distortion = distortion(xn.space(), target.space(), found.best->pairs);
      cell.message.clear();
      break;
    case SearchStatus::certified_infeasible:
      cell.status = CellStatus::certified_fail;
      cell.message = "no quasi-correspondence exists";
      break;
    case SearchStatus::budget_exhausted:
      cell.status = CellStatus::uncertified_fail;
      cell.message = "search budget exhausted";
      break;
  }
  return cell;
}

}  // namespace

std::string_view to_string(CellStatus status) noexcept {
  switch (status) {
    case CellStatus::pass:
      return "pass";
    case CellStatus::certified_fail:
      return "certified_fail";
    case CellStatus::uncertified_fail:
      return "uncertified_fail";
    case CellStatus::provider_error:
      break;
  }
  return "provider_error";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::consistent:
      return "consistent";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

GHSchedule GHSchedule::dyadic(std::size_t m_max) {
  GHSchedule s;
  double delta = 1.0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    delta *= 0.5;
    s.deltas.push_back(delta);
  }
  return s;
}

void GHSchedule::validate(std::size_t m_max) const {
  if (deltas.size() < m_max) {
    throw InvalidInput("schedule has fewer deltas than m_max");
  }
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0)) {
      throw InvalidInput("schedule deltas must be positive");
    }
    if (i > 0 && !(deltas[i] < deltas[i - 1])) {
      throw InvalidInput("schedule deltas must be strictly decreasing");
    }
  }
  if (!thresholds.empty()) {
    if (thresholds.size() < m_max) {
      throw InvalidInput("schedule has fewer thresholds than m_max");
    }
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
      if (thresholds[i] <= thresholds[i - 1]) {
        throw InvalidInput("schedule thresholds must be strictly increasing");
      }
    }
  }
}

CertifyResult certify_gh_convergence(const SpaceProvider& provider, const SequencedSpace& target,
                                     const GHSchedule& schedule, const CertifyOptions& options) {
  if (options.m_max == 0) {
    throw InvalidInput("m_max must be at least 1");
  }
  schedule.validate(options.m_max);
  if (options.probes.empty()) {
    throw InvalidInput("probe list must be nonempty");
  }
  for (std::size_t i = 1; i < options.probes.size(); ++i) {
    if (options.probes[i] <= options.probes[i - 1]) {
      throw InvalidInput("probes must be strictly increasing");
    }
  }

  const std::size_t probes = options.probes.size();
  const std::size_t m_max = options.m_max;
  // grid[m-1][i] is the cell for probe i.
  std::vector<std::vector<CertifyCell>> grid(m_max);
  for (const std::size_t n : options.probes) {
    std::optional<SequencedSpace> xn;
    std::string error;
    try {
      xn = provider(n);
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (std::size_t m = 1; m <= m_max; ++m) {
      const double delta = schedule.deltas[m - 1];
      if (!xn) {
        grid[m - 1].push_back({n, m, delta, CellStatus::provider_error, std::nullopt, "", error});
        continue;
      }
      grid[m - 1].push_back(run_cell(n, m, delta, *xn, target, options));
    }
  }

  CertifyResult result;
  result.verdict = Verdict::consistent;
  std::ostringstream blame;
  auto downgrade = [&](const CertifyCell& cell) {
    const Verdict v =
        cell.status == CellStatus::certified_fail ? Verdict::refuted : Verdict::inconclusive;
    if (result.verdict == Verdict::consistent ||
        (result.verdict == Verdict::inconclusive && v == Verdict::refuted)) {
      result.verdict = v;
      blame.str("");
      blame << " at n = " << cell.n << ", m = " << cell.m << " (" << to_string(cell.status)
            << ")";
    }
  };

  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto& row = grid[m - 1];
    if (schedule.thresholds.empty()) {
      std::optional<std::size_t> first_pass;
      for (std::size_t i = probes; i-- > 0;) {
        if (row[i].status != CellStatus::pass) {
          break;
        }
        first_pass = i;
      }
      result.thresholds.push_back(first_pass ? std::optional(options.probes[*first_pass])
                                             : std::nullopt);
      if (!first_pass) {
        downgrade(row.back());
      }
    } else {
      const std::size_t threshold = schedule.thresholds[m - 1];
      result.thresholds.emplace_back(threshold);
      for (const CertifyCell& cell : row) {
        if (cell.n >= threshold && cell.status != CellStatus::pass) {
          downgrade(cell);
        }
      }
    }
    result.cells.insert(result.cells.end(), row.begin(), row.end());
  }

  std::ostringstream summary;
  if (result.verdict == Verdict::consistent) {
    summary << "consistent with GH-convergence up to m = " << m_max << " over probes "
            << options.probes.front() << ".." << options.probes.back();
  } else {
    summary << to_string(result.verdict) << blame.str();
  }
  result.summary = summary.str();
  return result;
}

}  // namespace lms
