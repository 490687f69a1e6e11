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

#include "lms/experiment.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "json.hpp"
#include "lms/io.hpp"
#include "lms/models.hpp"

namespace lms::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  throw InvalidInput(std::string(source) + ": " + where + ": " + what);
}

struct Reader {
  std::string_view source;

  const json& require(const json& obj, const std::string& key, const std::string& where) const {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      fail(source, where, "missing \"" + key + "\"");
    }
    return *it;
  }

  std::size_t count(const json& v, const std::string& where) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      fail(source, where, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
  }

  double number(const json& v, const std::string& where) const {
    if (!v.is_number()) {
      fail(source, where, "expected a number");
    }
    return v.get<double>();
  }

  std::string string(const json& v, const std::string& where) const {
    if (!v.is_string()) {
      fail(source, where, "expected a string");
    }
    return v.get<std::string>();
  }

  std::vector<double> numbers(const json& v, const std::string& where) const {
    if (!v.is_array()) {
      fail(source, where, "expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(number(v[i], where + "/" + std::to_string(i)));
    }
    return out;
  }

  /// Either "points": [...] or "spacing" * j for j in [from, to].
  std::vector<double> line_points(const json& obj, const std::string& where) const {
    if (obj.contains("points")) {
      return numbers(obj["points"], where + "/points");
    }
    const double spacing = number(require(obj, "spacing", where), where + "/spacing");
    const auto from = require(obj, "from", where);
    const auto to = require(obj, "to", where);
    if (!from.is_number_integer() || !to.is_number_integer()) {
      fail(source, where, "\"from\" and \"to\" must be integers");
    }
    std::vector<double> out;
    for (long long j = from.get<long long>(); j <= to.get<long long>(); ++j) {
      out.push_back(spacing * static_cast<double>(j));
    }
    return out;
  }
};

enum class FamilyKind { minkowski_grid, minkowski_poisson, halfline, constant };

/// Samples are regenerated on demand and shared between provider and pairing.
struct FamilyState {
  FamilyKind kind = FamilyKind::constant;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::vector<double> line_points;
  std::optional<SequencedSpace> constant;

  std::optional<DiamondSample> target_diamond;
  std::optional<LineSample> target_line;

  std::mutex mutex;
  std::map<std::size_t, DiamondSample> diamonds;
  std::map<std::size_t, LineSample> lines;

  const DiamondSample& diamond(std::size_t n) {
    std::lock_guard lock(mutex);
    auto it = diamonds.find(n);
    if (it == diamonds.end()) {
      const auto mode =
          kind == FamilyKind::minkowski_grid ? SampleMode::grid : SampleMode::poisson;
      it = diamonds.emplace(n, sample_diamond(dim, n, mode, seed)).first;
    }
    return it->second;
  }

  const LineSample& line(std::size_t n) {
    std::lock_guard lock(mutex);
    auto it = lines.find(n);
    if (it == lines.end()) {
      it = lines.emplace(n, halfline_space(line_points, n)).first;
    }
    return it->second;
  }

  SequencedSpace provide(std::size_t n) {
    switch (kind) {
      case FamilyKind::minkowski_grid:
      case FamilyKind::minkowski_poisson: {
        const auto& s = diamond(n);
        return SequencedSpace(s.space, diamond_corners(s), true);
      }
      case FamilyKind::halfline:
        return line(n).space;
      case FamilyKind::constant:
        break;
    }
    return *constant;
  }
};

SequencedSpace load_sequenced(const std::string& path) {
  auto doc = load_space(path);
  if (!doc.seq) {
    throw InvalidInput(path + ": a \"seq\" entry is required");
  }
  return doc.sequenced();
}

std::string resolve_path(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative() && !base_dir.empty()) {
    p = std::filesystem::path(base_dir) / p;
  }
  return p.string();
}

}  // namespace

Experiment parse_experiment(std::string_view text, const std::string& base_dir,
                            std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, "byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) {
    fail(source, "/", "expected an object");
  }
  const Reader rd{source};
  Experiment ex;
  ex.name = doc.contains("name") ? rd.string(doc["name"], "/name") : std::string();

  // Family.
  auto state = std::make_shared<FamilyState>();
  const auto& family = rd.require(doc, "family", "/");
  const auto generator = rd.string(rd.require(family, "generator", "/family"), "/family/generator");
  if (generator == "minkowski_grid" || generator == "minkowski_poisson") {
    state->kind = generator == "minkowski_grid" ? FamilyKind::minkowski_grid
                                                : FamilyKind::minkowski_poisson;
    if (family.contains("dim")) {
      state->dim = rd.count(family["dim"], "/family/dim");
    }
    if (family.contains("seed")) {
      state->seed = rd.count(family["seed"], "/family/seed");
    }
  } else if (generator == "halfline") {
    state->kind = FamilyKind::halfline;
    state->line_points = rd.line_points(family, "/family");
  } else if (generator == "constant") {
    state->kind = FamilyKind::constant;
    state->constant = load_sequenced(
        resolve_path(base_dir, rd.string(rd.require(family, "space", "/family"), "/family/space")));
  } else {
    fail(source, "/family/generator", "unknown generator '" + generator + "'");
  }

  // Target.
  const auto& target = rd.require(doc, "target", "/");
  if (target.is_string()) {
    ex.target = load_sequenced(resolve_path(base_dir, target.get<std::string>()));
  } else if (target.is_object()) {
    const auto tg = rd.string(rd.require(target, "generator", "/target"), "/target/generator");
    if (tg == "minkowski_grid") {
      const std::size_t dim = target.contains("dim") ? rd.count(target["dim"], "/target/dim") : 2;
      const std::size_t n = rd.count(rd.require(target, "n", "/target"), "/target/n");
      state->target_diamond = sample_diamond(dim, n, SampleMode::grid);
      ex.target = SequencedSpace(state->target_diamond->space,
                                 diamond_corners(*state->target_diamond), true);
    } else if (tg == "realline") {
      state->target_line = realline_space(rd.line_points(target, "/target"));
      ex.target = state->target_line->space;
    } else {
      fail(source, "/target/generator", "unknown generator '" + tg + "'");
    }
  } else {
    fail(source, "/target", "expected a path or a generator object");
  }

  // Orders, schedule and probes.
  ex.options.m_max = rd.count(rd.require(doc, "m_max", "/"), "/m_max");
  const auto& schedule = rd.require(doc, "schedule", "/");
  if (schedule.contains("deltas")) {
    ex.schedule.deltas = rd.numbers(schedule["deltas"], "/schedule/deltas");
  } else if (schedule.value("dyadic", false)) {
    ex.schedule = GHSchedule::dyadic(ex.options.m_max);
  } else {
    fail(source, "/schedule", "expected \"deltas\" or \"dyadic\": true");
  }
  if (schedule.contains("thresholds")) {
    const auto& t = schedule["thresholds"];
    if (!t.is_array()) {
      fail(source, "/schedule/thresholds", "expected an array");
    }
    ex.schedule.thresholds.clear();
    for (std::size_t i = 0; i < t.size(); ++i) {
      ex.schedule.thresholds.push_back(
          rd.count(t[i], "/schedule/thresholds/" + std::to_string(i)));
    }
  }
  try {
    ex.schedule.validate(ex.options.m_max);
  } catch (const InvalidInput& e) {
    fail(source, "/schedule", e.what());
  }

  const auto& probes = rd.require(doc, "probes", "/");
  if (probes.is_array()) {
    for (std::size_t i = 0; i < probes.size(); ++i) {
      ex.options.probes.push_back(rd.count(probes[i], "/probes/" + std::to_string(i)));
    }
  } else if (probes.is_object()) {
    const std::size_t from = rd.count(rd.require(probes, "from", "/probes"), "/probes/from");
    const std::size_t to = rd.count(rd.require(probes, "to", "/probes"), "/probes/to");
    const std::size_t step =
        probes.contains("step") ? rd.count(probes["step"], "/probes/step") : 1;
    if (step == 0) {
      fail(source, "/probes/step", "must be positive");
    }
    for (std::size_t n = from; n <= to; n += step) {
      ex.options.probes.push_back(n);
    }
  } else {
    fail(source, "/probes", "expected an array or {from, to, step}");
  }
  if (ex.options.probes.empty()) {
    fail(source, "/probes", "no probes");
  }

  // Pairing.
  const std::string pairing = doc.contains("pairing") ? rd.string(doc["pairing"], "/pairing")
                                                      : std::string("search");
  if (pairing == "nearest") {
    if (!state->target_diamond || (state->kind != FamilyKind::minkowski_grid &&
                                   state->kind != FamilyKind::minkowski_poisson)) {
      fail(source, "/pairing", "nearest pairing needs a Minkowski family and target");
    }
    ex.options.pairing = [state](std::size_t n, const SequencedSpace&, const SequencedSpace&,
                                 std::size_t) {
      return nearest_pairing(state->diamond(n), *state->target_diamond);
    };
  } else if (pairing == "shift") {
    if (!state->target_line || state->kind != FamilyKind::halfline) {
      fail(source, "/pairing", "shift pairing needs a halfline family and realline target");
    }
    const double scale =
        doc.contains("shift_scale") ? rd.number(doc["shift_scale"], "/shift_scale") : 1.0;
    ex.options.pairing = [state, scale](std::size_t n, const SequencedSpace&,
                                        const SequencedSpace&, std::size_t) {
      return shift_pairs(state->line(n), *state->target_line, scale * static_cast<double>(n));
    };
  } else if (pairing != "search") {
    fail(source, "/pairing", "unknown pairing '" + pairing + "'");
  }
  if (doc.contains("search_fallback")) {
    if (!doc["search_fallback"].is_boolean()) {
      fail(source, "/search_fallback", "expected a boolean");
    }
    ex.options.search_fallback = doc["search_fallback"].get<bool>();
  }
  if (doc.contains("budget")) {
    ex.options.search.budget = rd.count(doc["budget"], "/budget");
  }

  ex.provider = [state](std::size_t n) { return state->provide(n); };
  return ex;
}

Experiment load_experiment(const std::string& path) {
  return parse_experiment(read_text_file(path),
                          std::filesystem::path(path).parent_path().string(), path);
}

}  // namespace lms::cli
