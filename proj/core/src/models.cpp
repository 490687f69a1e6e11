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

#include "lms/models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "lms/core.hpp"

namespace lms {

namespace {

std::vector<std::string> indexed_labels(std::size_t n, const char* prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

std::string number_label(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

// Heaviest-path closure; `order` is a topological order of the DAG.
SquareMatrix<double> heaviest_paths(std::size_t n, const std::vector<LinkEdge>& edges,
                                    const std::vector<PointIndex>& order) {
  std::vector<std::vector<std::pair<PointIndex, double>>> out(n);
  for (const LinkEdge& e : edges) {
    out[e.from].emplace_back(e.to, e.weight);
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[order[i]] = i;
  }
  SquareMatrix<double> d(n, 0.0);
  for (PointIndex s = 0; s < n; ++s) {
    std::vector<double> best(n, -1.0);
    best[s] = 0.0;
    for (std::size_t i = position[s]; i < n; ++i) {
      const PointIndex u = order[i];
      if (best[u] < 0.0) {
        continue;
      }
      for (const auto& [v, w] : out[u]) {
        best[v] = std::max(best[v], best[u] + w);
      }
    }
    for (PointIndex t = 0; t < n; ++t) {
      d(s, t) = t == s ? 0.0 : std::max(best[t], 0.0);
    }
  }
  return d;
}

LineSample line_space(const std::vector<double>& points, const std::vector<double>& terms) {
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  std::map<double, PointIndex> where;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(points[i])) {
      throw InvalidInput("sample points must be finite");
    }
    if (!where.emplace(points[i], i).second) {
      throw InvalidInput("sample points must be distinct");
    }
    labels.push_back(number_label(points[i]));
  }
  SquareMatrix<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = std::max(points[i] - points[j], 0.0);
    }
  }
  std::vector<PointIndex> seq;
  for (double v : terms) {
    const auto it = where.find(v);
    if (it == where.end()) {
      break;
    }
    seq.push_back(it->second);
  }
  if (seq.empty()) {
    throw InvalidInput("the sample does not contain the first sequence term " +
                       number_label(terms.front()));
  }
  return {SequencedSpace(FiniteLorentzSpace(std::move(labels), std::move(d)), std::move(seq)),
          points};
}

}  // namespace

double minkowski_distance(const SpacetimePoint& a, const SpacetimePoint& b) {
  if (a.x.size() != b.x.size()) {
    throw InvalidInput("spacetime points have different dimensions");
  }
  const double dt = b.t - a.t;
  double r2 = 0.0;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    const double dx = b.x[k] - a.x[k];
    r2 += dx * dx;
  }
  if (dt < 0.0 || dt * dt < r2) {
    return 0.0;
  }
  return std::sqrt(dt * dt - r2);
}

DiamondSample sample_diamond(std::size_t dim, std::size_t n, SampleMode mode, std::uint64_t seed) {
  if (dim < 2) {
    throw InvalidInput("spacetime dimension must be at least 2");
  }
  if (n == 0) {
    throw InvalidInput("sample size must be at least 1");
  }
  DiamondSample out;
  SquareMatrix<double> d;
  if (n == 1) {
    out.points.push_back({0.5, std::vector<double>(dim - 1, 0.0)});
    d = SquareMatrix<double>(1, 0.0);
  } else if (mode == SampleMode::grid && dim == 2) {
    // Null lattice: d = h sqrt(di * dj) with integer steps, so null pairs are exact zeros.
    const double h = 1.0 / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double u = static_cast<double>(i) * h;
        const double v = static_cast<double>(j) * h;
        out.points.push_back({(u + v) / 2.0, {(u - v) / 2.0}});
      }
    }
    d = SquareMatrix<double>(n * n, 0.0);
    for (std::size_t a = 0; a < n * n; ++a) {
      for (std::size_t b = 0; b < n * n; ++b) {
        const auto di = static_cast<long long>(b / n) - static_cast<long long>(a / n);
        const auto dj = static_cast<long long>(b % n) - static_cast<long long>(a % n);
        if (a != b && di >= 0 && dj >= 0) {
          d(a, b) = h * std::sqrt(static_cast<double>(di * dj));
        }
      }
    }
  } else if (mode == SampleMode::grid) {
    // Cartesian lattice with T = 2i, X_k = 2j_k - (n - 1) in units of h / 2.
    const std::size_t space_dims = dim - 1;
    const auto top = static_cast<long long>(2 * (n - 1));
    const double h = 1.0 / static_cast<double>(n - 1);
    std::vector<std::vector<long long>> lattice;
    std::vector<long long> idx(dim, 0);
    while (true) {
      const long long t2 = 2 * idx[0];
      long long r2 = 0;
      for (std::size_t k = 0; k < space_dims; ++k) {
        const long long xk = 2 * idx[k + 1] - static_cast<long long>(n - 1);
        r2 += xk * xk;
      }
      const long long reach = std::min(t2, top - t2);
      if (r2 <= reach * reach) {
        lattice.push_back(idx);
      }
      std::size_t k = dim;
      while (k > 0 && ++idx[k - 1] == static_cast<long long>(n)) {
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) {
        break;
      }
    }
    for (const auto& p : lattice) {
      SpacetimePoint sp{static_cast<double>(p[0]) * h, {}};
      for (std::size_t k = 0; k < space_dims; ++k) {
        sp.x.push_back(static_cast<double>(p[k + 1]) * h - 0.5);
      }
      out.points.push_back(std::move(sp));
    }
    const std::size_t count = lattice.size();
    d = SquareMatrix<double>(count, 0.0);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        const long long dt = lattice[b][0] - lattice[a][0];
        long long r2 = 0;
        for (std::size_t k = 1; k < dim; ++k) {
          const long long dx = lattice[b][k] - lattice[a][k];
          r2 += dx * dx;
        }
        if (dt >= 0 && dt * dt >= r2) {
          d(a, b) = h * std::sqrt(static_cast<double>(dt * dt - r2));
        }
      }
    }
  } else {
    SplitMix64 rng(seed);
    std::vector<std::pair<double, double>> null;
    while (out.points.size() < n) {
      if (dim == 2) {
        const double u = rng.uniform01();
        const double v = rng.uniform01();
        null.emplace_back(u, v);
        out.points.push_back({(u + v) / 2.0, {(u - v) / 2.0}});
        continue;
      }
      SpacetimePoint sp{rng.uniform01(), {}};
      double r2 = 0.0;
      for (std::size_t k = 0; k + 1 < dim; ++k) {
        sp.x.push_back(rng.uniform(-0.5, 0.5));
        r2 += sp.x.back() * sp.x.back();
      }
      const double reach = std::min(sp.t, 1.0 - sp.t);
      if (r2 <= reach * reach) {
        out.points.push_back(std::move(sp));
      }
    }
    d = SquareMatrix<double>(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) {
          continue;
        }
        if (dim == 2) {
          const double du = null[b].first - null[a].first;
          const double dv = null[b].second - null[a].second;
          d(a, b) = du >= 0.0 && dv >= 0.0 ? std::sqrt(du * dv) : 0.0;
        } else {
          d(a, b) = minkowski_distance(out.points[a], out.points[b]);
        }
      }
    }
  }
  out.space = FiniteLorentzSpace(indexed_labels(out.points.size(), "p"), std::move(d));
  return out;
}

std::vector<PointIndex> diamond_corners(const DiamondSample& sample) {
  const auto& pts = sample.points;
  PointIndex bottom = 0;
  PointIndex top = 0;
  PointIndex left = 0;
  PointIndex right = 0;
  for (PointIndex i = 1; i < pts.size(); ++i) {
    if (pts[i].t < pts[bottom].t) {
      bottom = i;
    }
    if (pts[i].t > pts[top].t) {
      top = i;
    }
    if (!pts[i].x.empty() && pts[i].x[0] < pts[left].x[0]) {
      left = i;
    }
    if (!pts[i].x.empty() && pts[i].x[0] > pts[right].x[0]) {
      right = i;
    }
  }
  return {bottom, top, right, left};
}

std::vector<IndexPair> nearest_pairing(const DiamondSample& a, const DiamondSample& b) {
  auto dist2 = [](const SpacetimePoint& p, const SpacetimePoint& q) {
    double s = (p.t - q.t) * (p.t - q.t);
    for (std::size_t k = 0; k < p.x.size(); ++k) {
      s += (p.x[k] - q.x[k]) * (p.x[k] - q.x[k]);
    }
    return s;
  };
  auto nearest = [&](const SpacetimePoint& p, const std::vector<SpacetimePoint>& pool) {
    PointIndex best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (PointIndex i = 0; i < pool.size(); ++i) {
      const double dd = dist2(p, pool[i]);
      if (dd < best_d) {
        best_d = dd;
        best = i;
      }
    }
    return best;
  };
  std::vector<IndexPair> pairs;
  for (PointIndex i = 0; i < a.points.size(); ++i) {
    pairs.emplace_back(i, nearest(a.points[i], b.points));
  }
  for (PointIndex j = 0; j < b.points.size(); ++j) {
    pairs.emplace_back(nearest(b.points[j], a.points), j);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<double> halfline_sequence(std::size_t n, std::size_t count) {
  if (n == 0) {
    throw InvalidInput("half-line family index must be at least 1");
  }
  std::vector<double> out;
  const auto nn = static_cast<double>(n);
  for (std::size_t k = 1; out.size() < count; ++k) {
    const auto kk = static_cast<double>(k);
    out.push_back(k < n ? nn - kk + 1.0 : 1.0 / (kk - nn + 1.0));  // p^{2k-1}
    if (out.size() < count) {
      out.push_back(nn + kk);  // p^{2k}
    }
  }
  return out;
}

std::vector<double> realline_sequence(std::size_t count) {
  std::vector<double> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    const auto kk = static_cast<double>(k);
    out.push_back(1.0 - kk);
    if (out.size() < count) {
      out.push_back(kk);
    }
  }
  return out;
}

LineSample halfline_space(const std::vector<double>& points, std::size_t n) {
  for (double p : points) {
    if (!(p > 0.0)) {
      throw InvalidInput("half-line sample points must be positive");
    }
  }
  return line_space(points, halfline_sequence(n, 2 * points.size() + 2));
}

LineSample realline_space(const std::vector<double>& points) {
  return line_space(points, realline_sequence(2 * points.size() + 2));
}

std::vector<IndexPair> shift_pairs(const LineSample& from, const LineSample& to, double shift) {
  std::map<double, PointIndex> where;
  for (PointIndex j = 0; j < to.points.size(); ++j) {
    where.emplace(to.points[j], j);
  }
  std::vector<IndexPair> pairs;
  for (PointIndex i = 0; i < from.points.size(); ++i) {
    const auto it = where.find(from.points[i] - shift);
    if (it != where.end()) {
      pairs.emplace_back(i, it->second);
    }
  }
  return pairs;
}

FiniteLorentzSpace from_link_weights(std::size_t n, const std::vector<LinkEdge>& edges) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<PointIndex>> out(n);
  for (const LinkEdge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw InvalidInput("link endpoint out of range");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InvalidInput("link weights must be positive and finite");
    }
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<PointIndex> order;
  std::vector<PointIndex> ready;
  for (PointIndex v = n; v-- > 0;) {
    if (indegree[v] == 0) {
      ready.push_back(v);
    }
  }
  while (!ready.empty()) {
    const PointIndex u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (PointIndex v : out[u]) {
      if (--indegree[v] == 0) {
        ready.push_back(v);
      }
    }
  }
  if (order.size() != n) {
    throw InvalidInput("link graph has a cycle");
  }
  return FiniteLorentzSpace(indexed_labels(n, "x"), heaviest_paths(n, edges, order));
}

FiniteLorentzSpace from_link_weights(std::size_t n, std::uint64_t seed, double edge_probability) {
  if (n == 0) {
    throw InvalidInput("causet must have at least one point");
  }
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidInput("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<LinkEdge> edges;
  for (PointIndex i = 0; i < n; ++i) {
    for (PointIndex j = i + 1; j < n; ++j) {
      if (rng.uniform01() < edge_probability) {
        edges.push_back({i, j, rng.uniform(0.5, 2.0)});
      }
    }
  }
  while (true) {
    FiniteLorentzSpace space = from_link_weights(n, edges);
    const AxiomReport report = validate_axioms(space);
    if (report.distinguishing.ok) {
      return space;
    }
    edges.push_back({report.distinguishing.witness[0], report.distinguishing.witness[1],
                     rng.uniform(0.5, 2.0)});
  }
}

FiniteLorentzSpace antichain(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("antichain must have at least one point");
  }
  return FiniteLorentzSpace(indexed_labels(n, "x"), SquareMatrix<double>(n, 0.0));
}

FiniteLorentzSpace chain(std::size_t n, double step) {
  if (n == 0) {
    throw InvalidInput("chain must have at least one point");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidInput("chain step must be positive and finite");
  }
  SquareMatrix<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d(i, j) = step * static_cast<double>(j - i);
    }
  }
  return FiniteLorentzSpace(indexed_labels(n, "x"), std::move(d));
}

}  // namespace lms
