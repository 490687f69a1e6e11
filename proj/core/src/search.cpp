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
#include <numeric>
#include <sstream>

#include "lms/core.hpp"
#include "lms/gh.hpp"

namespace lms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A point that must end up in R1 (side 0) or R2 (side 1).
struct Variable {
  int side = 0;
  PointIndex point = 0;
};

class Searcher {
 public:
  Searcher(const SequencedSpace& x, const SequencedSpace& y, std::size_t m, double eps,
           std::size_t budget)
      : x_(x.space()), y_(y.space()), eps_(eps), budget_(budget), tx_(x, m), ty_(y, m) {
    cover1_ = tx_.cover(eps);
    cover2_ = ty_.cover(eps);
    for (std::size_t r = 1; r <= m; ++r) {
      anchors_.emplace_back(x.anchor(r), y.anchor(r));
    }
    std::sort(anchors_.begin(), anchors_.end());
    anchors_.erase(std::unique(anchors_.begin(), anchors_.end()), anchors_.end());

    for (PointIndex p : cover1_) {
      vars_.push_back({0, p});
    }
    for (PointIndex p : cover2_) {
      vars_.push_back({1, p});
    }
    auto row_sum = [&](const Variable& v) {
      const FiniteLorentzSpace& s = v.side == 0 ? x_ : y_;
      double sum = 0.0;
      for (PointIndex z = 0; z < s.size(); ++z) {
        sum += s(v.point, z);
      }
      return sum;
    };
    std::vector<double> sums;
    for (const Variable& v : vars_) {
      sums.push_back(row_sum(v));
    }
    std::vector<std::size_t> order(vars_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (sums[a] != sums[b]) {
        return sums[a] > sums[b];
      }
      if (vars_[a].side != vars_[b].side) {
        return vars_[a].side < vars_[b].side;
      }
      return vars_[a].point < vars_[b].point;
    });
    std::vector<Variable> sorted;
    for (std::size_t i : order) {
      sorted.push_back(vars_[i]);
    }
    vars_ = std::move(sorted);

    cov1_.assign(x_.size(), 0);
    cov2_.assign(y_.size(), 0);
  }

  std::size_t largest_cover() const { return std::max(cover1_.size(), cover2_.size()); }
  std::size_t nodes() const { return nodes_; }

  // Distortion contributed by adding (a, b) to the current relation.
  double increment(PointIndex a, PointIndex b) const {
    double worst = 0.0;
    for (const auto& [c, e] : current_) {
      worst = std::max(worst, std::abs(x_(a, c) - y_(b, e)));
      worst = std::max(worst, std::abs(x_(c, a) - y_(e, b)));
    }
    return worst;
  }

  double full_distortion(const std::vector<IndexPair>& pairs) const {
    return pairs.empty() ? 0.0 : distortion(x_, y_, pairs);
  }

  void push(PointIndex a, PointIndex b) {
    current_.emplace_back(a, b);
    ++cov1_[a];
    ++cov2_[b];
  }

  void pop() {
    const auto [a, b] = current_.back();
    --cov1_[a];
    --cov2_[b];
    current_.pop_back();
  }

  bool covered(const Variable& v) const {
    return v.side == 0 ? cov1_[v.point] > 0 : cov2_[v.point] > 0;
  }

  bool all_covered(const std::vector<IndexPair>& pairs) const {
    std::vector<char> c1(x_.size(), 0);
    std::vector<char> c2(y_.size(), 0);
    for (const auto& [a, b] : pairs) {
      c1[a] = 1;
      c2[b] = 1;
    }
    return std::all_of(cover1_.begin(), cover1_.end(), [&](PointIndex p) { return c1[p]; }) &&
           std::all_of(cover2_.begin(), cover2_.end(), [&](PointIndex p) { return c2[p]; });
  }

  // Anchor pairs start every relation; returns their distortion.
  double seed() {
    current_.clear();
    std::fill(cov1_.begin(), cov1_.end(), 0);
    std::fill(cov2_.begin(), cov2_.end(), 0);
    double dis = 0.0;
    for (const auto& [a, b] : anchors_) {
      dis = std::max(dis, increment(a, b));
      push(a, b);
    }
    return dis;
  }

  // Branch and bound; returns false if the node budget ran out.
  bool exact(double bound) {
    best_dis_ = bound;
    best_.reset();
    const double start = seed();
    if (start >= eps_ || start >= best_dis_) {
      return true;
    }
    aborted_ = false;
    dfs(0, start);
    return !aborted_;
  }

  // Greedy profile matching followed by reassignment and swap moves.
  void heuristic() {
    double dis = seed();
    std::vector<std::size_t> assigned;  // variable ids given a partner
    std::vector<PointIndex> partner(vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const Variable& v = vars_[i];
      if (covered(v)) {
        continue;
      }
      const PointSet& domain = v.side == 0 ? ty_.xm() : tx_.xm();
      PointIndex choice = domain.front();
      auto key_best = std::tuple{kInf, kInf, choice};
      for (PointIndex c : domain) {
        const auto [a, b] = v.side == 0 ? IndexPair{v.point, c} : IndexPair{c, v.point};
        auto key = std::tuple{profile_gap(a, b), increment(a, b), c};
        if (key < key_best) {
          key_best = key;
          choice = c;
        }
      }
      const auto [a, b] = v.side == 0 ? IndexPair{v.point, choice} : IndexPair{choice, v.point};
      dis = std::max(dis, increment(a, b));
      push(a, b);
      partner[i] = choice;
      assigned.push_back(i);
    }

    auto build = [&](const std::vector<PointIndex>& p) {
      std::vector<IndexPair> pairs = anchors_;
      for (std::size_t i : assigned) {
        const Variable& v = vars_[i];
        pairs.push_back(v.side == 0 ? IndexPair{v.point, p[i]} : IndexPair{p[i], v.point});
      }
      return pairs;
    };

    double value = full_distortion(build(partner));
    bool improved = true;
    while (improved && value > 0.0 && nodes_ < budget_) {
      improved = false;
      for (std::size_t i : assigned) {
        const PointSet& domain = vars_[i].side == 0 ? ty_.xm() : tx_.xm();
        for (PointIndex c : domain) {
          if (c == partner[i] || nodes_ >= budget_) {
            continue;
          }
          ++nodes_;
          std::vector<PointIndex> trial = partner;
          trial[i] = c;
          const auto pairs = build(trial);
          const double v = full_distortion(pairs);
          if (v < value && all_covered(pairs)) {
            partner = std::move(trial);
            value = v;
            improved = true;
          }
        }
      }
      for (std::size_t a = 0; a < assigned.size(); ++a) {
        for (std::size_t b = a + 1; b < assigned.size(); ++b) {
          const std::size_t i = assigned[a];
          const std::size_t j = assigned[b];
          if (vars_[i].side != vars_[j].side || partner[i] == partner[j] || nodes_ >= budget_) {
            continue;
          }
          ++nodes_;
          std::vector<PointIndex> trial = partner;
          std::swap(trial[i], trial[j]);
          const auto pairs = build(trial);
          const double v = full_distortion(pairs);
          if (v < value && all_covered(pairs)) {
            partner = std::move(trial);
            value = v;
            improved = true;
          }
        }
      }
    }
    if (value < eps_) {
      best_ = build(partner);
      best_dis_ = value;
    }
  }

  const std::optional<std::vector<IndexPair>>& best() const { return best_; }

 private:
  double profile_gap(PointIndex a, PointIndex b) const {
    double gap = 0.0;
    for (const auto& [p, q] : anchors_) {
      gap = std::max(gap, std::abs(x_(p, a) - y_(q, b)));
      gap = std::max(gap, std::abs(x_(a, p) - y_(b, q)));
    }
    return gap;
  }

  void dfs(std::size_t i, double dis) {
    if (aborted_ || best_dis_ == 0.0) {
      return;
    }
    while (i < vars_.size() && covered(vars_[i])) {
      ++i;
    }
    if (i == vars_.size()) {
      best_ = current_;
      best_dis_ = dis;
      return;
    }
    const Variable v = vars_[i];
    const PointSet& domain = v.side == 0 ? ty_.xm() : tx_.xm();
    std::vector<std::pair<double, PointIndex>> candidates;
    for (PointIndex c : domain) {
      const auto [a, b] = v.side == 0 ? IndexPair{v.point, c} : IndexPair{c, v.point};
      const double next = std::max(dis, increment(a, b));
      if (next < eps_ && next < best_dis_) {
        candidates.emplace_back(next, c);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [next, c] : candidates) {
      if (next >= best_dis_) {
        continue;
      }
      if (nodes_ >= budget_) {
        aborted_ = true;
        return;
      }
      ++nodes_;
      const auto [a, b] = v.side == 0 ? IndexPair{v.point, c} : IndexPair{c, v.point};
      push(a, b);
      dfs(i + 1, next);
      pop();
      if (aborted_ || best_dis_ == 0.0) {
        return;
      }
    }
  }

  const FiniteLorentzSpace& x_;
  const FiniteLorentzSpace& y_;
  double eps_;
  std::size_t budget_;
  Truncation tx_;
  Truncation ty_;
  PointSet cover1_;
  PointSet cover2_;
  std::vector<IndexPair> anchors_;
  std::vector<Variable> vars_;
  std::vector<int> cov1_;
  std::vector<int> cov2_;
  std::vector<IndexPair> current_;
  std::optional<std::vector<IndexPair>> best_;
  double best_dis_ = kInf;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::string_view to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::certified_infeasible:
      return "certified-infeasible";
    case SearchStatus::budget_exhausted:
      break;
  }
  return "budget-exhausted";
}

SearchResult search_qc(const SequencedSpace& x, const SequencedSpace& y, std::size_t m, double eps,
                       const SearchOptions& options) {
  if (m == 0 || m > x.length() || m > y.length()) {
    std::ostringstream msg;
    msg << "order " << m << " exceeds a sequence length (" << x.length() << ", " << y.length()
        << ")";
    throw InvalidInput(msg.str());
  }
  if (!(eps > 0.0)) {
    throw InvalidInput("eps must be positive");
  }
  Searcher searcher(x, y, m, eps, options.budget);
  SearchResult result;
  bool complete = false;
  if (searcher.largest_cover() <= options.exact_limit) {
    result.method = "exact";
    complete = searcher.exact(kInf);
  } else {
    result.method = "heuristic";
    searcher.heuristic();
    if (!searcher.best()) {
      result.method = "heuristic+exact";
      complete = searcher.exact(kInf);
    }
  }
  result.nodes = searcher.nodes();
  result.exhaustive = complete;
  if (searcher.best()) {
    result.status = SearchStatus::found;
    result.best = make_qc(*searcher.best(), m, eps, x.space().size(), y.space().size());
  } else {
    result.status = complete ? SearchStatus::certified_infeasible : SearchStatus::budget_exhausted;
  }
  return result;
}

}  // namespace lms
