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

#include "lms/chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lms/core.hpp"
#include "lms/parallel.hpp"

namespace lms {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_isocausal(const FiniteLorentzSpace& space, const Chain& chain) {
  Chain causal{chain.points, ChainMode::isocausal};
  if (chain.points.empty()) {
    throw InvalidInput("chain must contain at least one point");
  }
  if (auto c = validate_chain(space, causal); !c) {
    std::ostringstream msg;
    msg << "chain is not isocausal at positions " << c.witness[0] << " and " << c.witness[1];
    throw InvalidInput(msg.str());
  }
}

// Topological order of the strict part of J (Kahn, smallest index first).
std::vector<PointIndex> topological_order(const FiniteLorentzSpace& space, const Relation& j) {
  const std::size_t n = space.size();
  std::vector<std::size_t> indegree(n, 0);
  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = 0; y < n; ++y) {
      indegree[y] += strictly_causal(j, x, y) ? 1 : 0;
    }
  }
  std::vector<PointIndex> order;
  std::vector<char> done(n, 0);
  while (order.size() < n) {
    PointIndex next = kNone;
    for (PointIndex x = 0; x < n; ++x) {
      if (!done[x] && indegree[x] == 0) {
        next = x;
        break;
      }
    }
    if (next == kNone) {
      std::ostringstream msg;
      msg << "strict causal relation has a cycle through";
      for (PointIndex x = 0; x < n; ++x) {
        if (!done[x]) {
          msg << ' ' << space.label(x);
        }
      }
      throw InvalidInput(msg.str());
    }
    done[next] = 1;
    order.push_back(next);
    for (PointIndex y = 0; y < n; ++y) {
      if (strictly_causal(j, next, y)) {
        --indegree[y];
      }
    }
  }
  return order;
}

struct Best {
  double length = -1.0;  // negative: unreachable
  std::size_t count = 0;
  PointIndex pred = kNone;
};

// Longest strict-J chains from `source` to every point.
std::vector<Best> longest_from(const FiniteLorentzSpace& space, const Relation& j,
                               const std::vector<PointIndex>& order, PointIndex source) {
  std::vector<Best> best(space.size());
  best[source] = {0.0, 1, kNone};
  const double tol = space.tol();
  auto start = std::find(order.begin(), order.end(), source);
  for (auto it = start + 1; it != order.end(); ++it) {
    const PointIndex y = *it;
    for (PointIndex z = 0; z < space.size(); ++z) {
      if (best[z].length < 0.0 || !strictly_causal(j, z, y)) {
        continue;
      }
      const double len = best[z].length + space(z, y);
      const std::size_t count = best[z].count + 1;
      Best& b = best[y];
      const bool longer = len > b.length + tol;
      const bool tie = std::abs(len - b.length) <= tol;
      if (b.length < 0.0 || longer || (tie && count > b.count)) {
        b = {len, count, z};
      }
    }
  }
  return best;
}

}  // namespace

Check validate_chain(const FiniteLorentzSpace& space, const Chain& chain) {
  for (PointIndex p : chain.points) {
    if (p >= space.size()) {
      throw InvalidInput("chain index out of range");
    }
  }
  const std::size_t len = chain.points.size();
  if (chain.mode == ChainMode::isochronal) {
    for (std::size_t s = 0; s < len; ++s) {
      for (std::size_t t = s + 1; t < len; ++t) {
        if (!space.precedes(chain.points[s], chain.points[t])) {
          return {false, {s, t}};
        }
      }
    }
    return {};
  }
  const Relation j = causality(space);
  for (std::size_t s = 0; s < len; ++s) {
    for (std::size_t t = s + 1; t < len; ++t) {
      if (!strictly_causal(j, chain.points[s], chain.points[t])) {
        return {false, {s, t}};
      }
    }
  }
  return {};
}

double chain_length(const FiniteLorentzSpace& space, const Chain& chain) {
  require_isocausal(space, chain);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
    sum += space(chain.points[i], chain.points[i + 1]);
  }
  return sum;
}

bool is_maximal_chain(const FiniteLorentzSpace& space, const Chain& chain) {
  require_isocausal(space, chain);
  const auto& c = chain.points;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (std::abs(space(c[i], c[j]) + space(c[j], c[k]) - space(c[i], c[k])) > space.tol()) {
          return false;
        }
      }
    }
  }
  return true;
}

SquareMatrix<double> dcheck(const FiniteLorentzSpace& space) {
  const Relation j = causality(space);
  const std::vector<PointIndex> order = topological_order(space, j);
  SquareMatrix<double> out(space.size(), 0.0);
  parallel_for(space.size(), [&](std::size_t x) {
    const std::vector<Best> best = longest_from(space, j, order, x);
    for (PointIndex y = 0; y < space.size(); ++y) {
      out(x, y) = std::max(best[y].length, 0.0);
    }
  });
  return out;
}

LengthReport check_length_property(const FiniteLorentzSpace& space) {
  const SquareMatrix<double> dc = dcheck(space);
  LengthReport report;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (!space.precedes(x, y)) {
        continue;
      }
      const double gap = space(x, y) - dc(x, y);
      report.worst_gap = std::max(report.worst_gap, gap);
      if (report.ok && gap > space.tol()) {
        report.ok = false;
        report.witness = {x, y};
      }
    }
  }
  return report;
}

std::optional<Chain> maximal_chain_between(const FiniteLorentzSpace& space, PointIndex x,
                                           PointIndex y) {
  if (x >= space.size() || y >= space.size()) {
    throw InvalidInput("chain endpoint out of range");
  }
  if (!space.precedes(x, y)) {
    return std::nullopt;
  }
  const Relation j = causality(space);
  const std::vector<Best> best = longest_from(space, j, topological_order(space, j), x);
  if (best[y].length < 0.0) {
    return std::nullopt;
  }
  Chain chain;
  for (PointIndex p = y; p != kNone; p = best[p].pred) {
    chain.points.push_back(p);
  }
  std::reverse(chain.points.begin(), chain.points.end());
  return chain;
}

}  // namespace lms
