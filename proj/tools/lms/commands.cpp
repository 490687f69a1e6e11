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

#include "lms/commands.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lms/experiment.hpp"

namespace lms::cli {

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

Json pairs_json(const FiniteLorentzSpace& space, const Relation& r) {
  Json out = Json::array();
  for (const auto& [x, y] : r.pairs()) {
    out.push_back({space.label(x), space.label(y)});
  }
  return out;
}

Json space_json(const SpaceDocument& doc) {
  Json out = Json::parse(dump_space(doc));
  out.erase("format");
  return out;
}

Json tf_json(const FiniteLorentzSpace& space, const TimeFunction& tf) {
  Json values = Json::object();
  for (PointIndex x = 0; x < space.size(); ++x) {
    values[space.label(x)] = tf.values[x];
  }
  return {{"values", std::move(values)},
          {"alpha", tf.alpha},
          {"beta", tf.beta},
          {"enumeration", labels_json(space, tf.enumeration)}};
}

Json header(std::string_view command) { return {{"format", 1}, {"command", command}}; }

SequencedSpace sequenced_or_throw(const SpaceDocument& doc, const std::string& path) {
  if (!doc.seq) {
    throw InvalidInput(path + ": a \"seq\" entry is required");
  }
  return doc.sequenced();
}

}  // namespace

PointIndex resolve_token(const FiniteLorentzSpace& space, const std::string& token) {
  if (auto found = space.find(token)) {
    return *found;
  }
  PointIndex index = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, index);
  if (ec != std::errc{} || ptr != end || index >= space.size()) {
    throw InvalidInput("unknown point '" + token + "'");
  }
  return index;
}

std::vector<PointIndex> resolve_list(const FiniteLorentzSpace& space, const std::string& csv) {
  std::vector<PointIndex> out;
  for (const auto& token : split_csv(csv)) {
    out.push_back(resolve_token(space, token));
  }
  return out;
}

Json labels_json(const FiniteLorentzSpace& space, const std::vector<PointIndex>& points) {
  Json out = Json::array();
  for (PointIndex p : points) {
    out.push_back(space.label(p));
  }
  return out;
}

Json check_json(const FiniteLorentzSpace& space, const Check& check) {
  Json out = {{"ok", check.ok}};
  if (!check.ok) {
    out["witness"] = labels_json(space, check.witness);
  }
  return out;
}

Json matrix_json(const SquareMatrix<double>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
  }
  return rows;
}

Outcome cmd_check(const std::string& path) {
  const auto doc = load_space(path);
  const auto& s = doc.space;
  const auto axioms = validate_axioms(s);
  const auto causal = check_causal_properties(s);
  Outcome out{header("check")};
  out.doc["points"] = s.size();
  out.doc["axioms"] = {{"reverse_triangle", check_json(s, axioms.reverse_triangle)},
                       {"distinguishing", check_json(s, axioms.distinguishing)}};
  out.doc["causal"] = {{"closed", causal.closed},
                       {"reflexive", check_json(s, causal.reflexive)},
                       {"transitive", check_json(s, causal.transitive)},
                       {"antisymmetric", check_json(s, causal.antisymmetric)},
                       {"i_subset_j", check_json(s, causal.i_subset_j)},
                       {"push_up", check_json(s, causal.push_up)},
                       {"causal_additivity", check_json(s, causal.causal_additivity)}};
  out.doc["ok"] = axioms.ok() && causal.ok();
  out.code = out.doc["ok"].get<bool>() ? kOk : kRefuted;
  return out;
}

Outcome cmd_relations(const std::string& path, std::optional<double> eps) {
  const auto doc = load_space(path);
  const auto& s = doc.space;
  Outcome out{header("relations")};
  out.doc["chronology"] = pairs_json(s, chronology(s));
  out.doc["causal"] = pairs_json(s, causality(s));
  if (eps) {
    out.doc["chronology_eps"] = {{"eps", *eps}, {"pairs", pairs_json(s, chronology_eps(s, *eps))}};
  }
  return out;
}

Outcome cmd_boundaries(const std::string& path, const std::string& hull_set,
                       const std::string& relation, std::optional<double> eps) {
  const auto doc = load_space(path);
  const auto& s = doc.space;
  const auto b = boundaries(s);
  Outcome out{header("boundaries")};
  out.doc["future"] = labels_json(s, b.future);
  out.doc["past"] = labels_json(s, b.past);
  out.doc["interior"] = labels_json(s, b.interior);
  if (!hull_set.empty()) {
    const auto set = make_point_set(resolve_list(s, hull_set));
    Relation r;
    if (relation == "chronology") {
      r = chronology(s);
    } else if (relation == "causal") {
      r = causality(s);
    } else if (relation == "chronology_eps") {
      if (!eps) {
        throw InvalidInput("--relation chronology_eps needs --eps");
      }
      r = chronology_eps(s, *eps);
    } else {
      throw InvalidInput("unknown relation '" + relation + "'");
    }
    out.doc["hull"] = {{"set", labels_json(s, set)},
                       {"relation", relation},
                       {"points", labels_json(s, hull(s, set, r))}};
  }
  return out;
}

Outcome cmd_time(const std::string& path, const std::string& enumeration,
                 const std::string& normalize) {
  const auto doc = load_space(path);
  const auto& s = doc.space;
  auto tf = time_function(s, resolve_list(s, enumeration));
  const auto mono = strictly_monotone(s, tf);
  if (!normalize.empty()) {
    const auto pair = resolve_list(s, normalize);
    if (pair.size() != 2) {
      throw InvalidInput("--normalize expects two points x,y");
    }
    tf = affine_normalize(tf, pair[0], pair[1]);
  }
  Outcome out{header("time")};
  out.doc.update(tf_json(s, tf));
  out.doc["monotone"] = check_json(s, mono);
  out.code = mono.ok ? kOk : kRefuted;
  return out;
}

Outcome cmd_length(const std::string& path, const std::string& from, const std::string& to) {
  const auto doc = load_space(path);
  const auto& s = doc.space;
  Outcome out{header("length")};
  if (from.empty() != to.empty()) {
    throw InvalidInput("--from and --to go together");
  }
  if (!from.empty()) {
    const PointIndex x = resolve_token(s, from);
    const PointIndex y = resolve_token(s, to);
    out.doc["from"] = s.label(x);
    out.doc["to"] = s.label(y);
    out.doc["d"] = s.d(x, y);
    const auto c = maximal_chain_between(s, x, y);
    if (!c) {
      out.doc["chain"] = nullptr;
      out.code = kRefuted;
      return out;
    }
    out.doc["chain"] = labels_json(s, c->points);
    out.doc["length"] = chain_length(s, *c);
    out.doc["maximal"] = is_maximal_chain(s, *c);
    return out;
  }
  const auto report = check_length_property(s);
  out.doc["dcheck"] = matrix_json(dcheck(s));
  out.doc["length_property"] = {{"ok", report.ok}, {"worst_gap", report.worst_gap}};
  if (!report.ok) {
    out.doc["length_property"]["witness"] = labels_json(s, report.witness);
  }
  out.code = report.ok ? kOk : kRefuted;
  return out;
}

Outcome cmd_quotient(const std::string& path, const std::string& region, bool with_i0) {
  const auto doc = load_space(path);
  const auto& s = doc.space;
  const PointSet y = region.empty() ? s.all_points() : make_point_set(resolve_list(s, region));
  const auto q = quotient(s, y);
  Outcome out{header("quotient")};
  out.doc["region"] = labels_json(s, q.region);
  out.doc["kernel"] = labels_json(s, q.kernel);
  out.doc["ring"] = labels_json(s, q.ring);
  Json classes = Json::object();
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    classes[q.space.label(c)] = labels_json(s, q.classes[c]);
  }
  FiniteLorentzSpace qs = q.space;
  if (with_i0 && !q.kernel.empty()) {
    // The kernel collapses to one extra point at distance zero from everything.
    auto labels = qs.labels();
    labels.push_back("i0");
    SquareMatrix<double> d(labels.size(), 0.0);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j = 0; j < qs.size(); ++j) {
        d(i, j) = qs.d(i, j);
      }
    }
    qs = FiniteLorentzSpace(std::move(labels), std::move(d), qs.tol());
    classes["i0"] = labels_json(s, q.kernel);
  }
  out.doc["classes"] = std::move(classes);
  out.doc["space"] = space_json(SpaceDocument{qs, std::nullopt, false, std::nullopt});
  return out;
}

Outcome cmd_quasimetric(const std::string& path, const std::string& seq, bool total) {
  auto doc = load_space(path);
  if (!seq.empty()) {
    doc.seq = resolve_list(doc.space, seq);
  }
  doc.total = doc.total || total;
  const auto ss = sequenced_or_throw(doc, path);
  const auto qm = quasi_metrics(ss);
  const auto report = verify_qm_properties(ss, qm);
  const auto& s = ss.space();
  Outcome out{header("quasimetric")};
  out.doc["seq"] = labels_json(s, ss.seq());
  out.doc["total"] = ss.total();
  out.doc["tail_rule"] = qm.tail_rule;
  out.doc["gamma"] = matrix_json(qm.gamma);
  out.doc["p"] = matrix_json(qm.p);
  const bool ok = report.p_triangle.ok && report.zero_set_equals_j.ok && report.sandwich.ok &&
                  report.gamma_metric.ok;
  out.doc["report"] = {{"ok", ok},
                       {"p_triangle", check_json(s, report.p_triangle)},
                       {"zero_set_equals_j", check_json(s, report.zero_set_equals_j)},
                       {"sandwich", check_json(s, report.sandwich)},
                       {"gamma_metric", check_json(s, report.gamma_metric)},
                       {"triangle_slack", report.triangle_slack},
                       {"sandwich_slack", report.sandwich_slack}};
  out.code = ok ? kOk : kRefuted;
  return out;
}

Outcome cmd_gh_search(const std::string& a, const std::string& b, std::size_t m, double eps,
                      std::size_t budget) {
  const auto x = sequenced_or_throw(load_space(a), a);
  const auto y = sequenced_or_throw(load_space(b), b);
  SearchOptions options;
  options.budget = budget;
  const auto result = search_qc(x, y, m, eps, options);
  Outcome out{header("gh search")};
  out.doc["m"] = m;
  out.doc["eps"] = eps;
  out.doc["status"] = to_string(result.status);
  out.doc["exhaustive"] = result.exhaustive;
  out.doc["nodes"] = result.nodes;
  out.doc["method"] = result.method;
  if (result.best) {
    const auto& qc = *result.best;
    Json pairs = Json::array();
    for (const auto& [p, q] : qc.pairs) {
      pairs.push_back({x.space().label(p), y.space().label(q)});
    }
    out.doc["distortion"] = distortion(x.space(), y.space(), qc.pairs);
    out.doc["pairs"] = std::move(pairs);
    out.doc["verified"] = verify_qc(x, y, qc).ok();
  } else {
    out.doc["distortion"] = nullptr;
    out.doc["pairs"] = nullptr;
  }
  switch (result.status) {
    case SearchStatus::found: out.code = kOk; break;
    case SearchStatus::certified_infeasible: out.code = kRefuted; break;
    case SearchStatus::budget_exhausted: out.code = kInconclusive; break;
  }
  return out;
}

Outcome cmd_gh_certify(const std::string& experiment) {
  const auto ex = load_experiment(experiment);
  const auto result =
      certify_gh_convergence(ex.provider, ex.target, ex.schedule, ex.options);
  Outcome out{header("gh certify")};
  out.doc["experiment"] = ex.name;
  out.doc["verdict"] = to_string(result.verdict);
  out.doc["summary"] = result.summary;
  Json thresholds = Json::array();
  for (const auto& t : result.thresholds) {
    thresholds.push_back(t ? Json(*t) : Json(nullptr));
  }
  out.doc["thresholds"] = std::move(thresholds);
  Json cells = Json::array();
  for (const auto& c : result.cells) {
    Json cell = {{"n", c.n},
                 {"m", c.m},
                 {"delta", c.delta},
                 {"status", to_string(c.status)},
                 {"distortion", c.distortion ? Json(*c.distortion) : Json(nullptr)},
                 {"method", c.method}};
    if (!c.message.empty()) {
      cell["message"] = c.message;
    }
    cells.push_back(std::move(cell));
  }
  out.doc["cells"] = std::move(cells);
  switch (result.verdict) {
    case Verdict::consistent: out.code = kOk; break;
    case Verdict::refuted: out.code = kRefuted; break;
    case Verdict::inconclusive: out.code = kInconclusive; break;
  }
  return out;
}

Outcome cmd_sample_minkowski(std::size_t dim, std::size_t n, const std::string& mode,
                             std::uint64_t seed) {
  SampleMode sm;
  if (mode == "grid") {
    sm = SampleMode::grid;
  } else if (mode == "poisson") {
    sm = SampleMode::poisson;
  } else {
    throw InvalidInput("unknown sampling mode '" + mode + "'");
  }
  const auto sample = sample_diamond(dim, n, sm, seed);
  std::vector<std::vector<double>> coords;
  coords.reserve(sample.points.size());
  for (const auto& p : sample.points) {
    std::vector<double> c{p.t};
    c.insert(c.end(), p.x.begin(), p.x.end());
    coords.push_back(std::move(c));
  }
  Outcome out{{{"format", 1}}};
  out.doc.update(space_json(SpaceDocument{sample.space, diamond_corners(sample), true, coords}));
  return out;
}

Outcome cmd_sample_halfline(const std::string& points, std::size_t n, bool real_line) {
  std::vector<double> values;
  for (const auto& token : split_csv(points)) {
    double v = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
      throw InvalidInput("not a number: '" + token + "'");
    }
    values.push_back(v);
  }
  const auto sample = real_line ? realline_space(values) : halfline_space(values, n);
  std::vector<std::vector<double>> coords;
  for (double v : sample.points) {
    coords.push_back({v});
  }
  Outcome out{{{"format", 1}}};
  out.doc.update(space_json(SpaceDocument{sample.space.space(), sample.space.seq(),
                                          sample.space.total(), coords}));
  return out;
}

Outcome cmd_sample_causet(const std::string& kind, std::size_t n, std::uint64_t seed,
                          double edge_probability) {
  FiniteLorentzSpace s;
  if (kind == "links") {
    s = from_link_weights(n, seed, edge_probability);
  } else if (kind == "antichain") {
    s = antichain(n);
  } else if (kind == "chain") {
    s = chain(n);
  } else {
    throw InvalidInput("unknown causet kind '" + kind + "'");
  }
  Outcome out{{{"format", 1}}};
  out.doc.update(space_json(SpaceDocument{s, std::nullopt, false, std::nullopt}));
  return out;
}

}  // namespace lms::cli
