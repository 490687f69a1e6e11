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

#include "lms/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lms {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  std::ostringstream msg;
  msg << source << ": " << where << ": " << what;
  throw InvalidInput(msg.str());
}

std::string pointer(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    out += '/';
    out += p;
  }
  return out;
}

double number_at(const json& v, std::string_view source, const std::string& where) {
  if (!v.is_number()) {
    fail(source, where, "expected a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    fail(source, where, "number is not finite");
  }
  return x;
}

}  // namespace

SequencedSpace SpaceDocument::sequenced() const {
  if (!seq) {
    throw InvalidInput("space has no sequence; supply \"seq\" in the file or --seq");
  }
  return SequencedSpace(space, *seq, total);
}

SpaceDocument parse_space(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, "byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_object()) {
    fail(source, "/", "expected an object");
  }

  if (const auto it = doc.find("format"); it != doc.end() && *it != 1) {
    fail(source, "/format", "unsupported format version (expected 1)");
  }

  const auto labels_it = doc.find("labels");
  if (labels_it == doc.end() || !labels_it->is_array()) {
    fail(source, "/labels", "expected an array of strings");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_it->size(); ++i) {
    if (!(*labels_it)[i].is_string()) {
      fail(source, pointer({"labels", std::to_string(i)}), "expected a string");
    }
    labels.push_back((*labels_it)[i].get<std::string>());
  }
  const std::size_t n = labels.size();

  double tol = kDefaultTolerance;
  if (const auto it = doc.find("tol"); it != doc.end()) {
    tol = number_at(*it, source, "/tol");
    if (tol < 0.0) {
      fail(source, "/tol", "tolerance must be nonnegative");
    }
  }

  const auto d_it = doc.find("d");
  if (d_it == doc.end() || !d_it->is_array()) {
    fail(source, "/d", "expected an array of rows");
  }
  if (d_it->size() != n) {
    fail(source, "/d", "matrix has " + std::to_string(d_it->size()) + " rows but there are " +
                           std::to_string(n) + " labels");
  }
  SquareMatrix<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = (*d_it)[i];
    const std::string row_ptr = pointer({"d", std::to_string(i)});
    if (!row.is_array() || row.size() != n) {
      fail(source, row_ptr, "matrix is not square: expected a row of " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = pointer({"d", std::to_string(i), std::to_string(j)});
      const double v = number_at(row[j], source, where);
      if (v < 0.0) {
        fail(source, where, "negative distance");
      }
      if (i == j && v > tol) {
        fail(source, where, "diagonal entry exceeds tol");
      }
      d(i, j) = v;
    }
  }

  SpaceDocument out;
  try {
    out.space = FiniteLorentzSpace(labels, std::move(d), tol);
  } catch (const InvalidInput& e) {
    fail(source, "/labels", e.what());
  }

  if (const auto it = doc.find("seq"); it != doc.end()) {
    if (!it->is_array() || it->empty()) {
      fail(source, "/seq", "expected a nonempty array of indices or labels");
    }
    std::vector<PointIndex> seq;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& v = (*it)[k];
      const std::string where = pointer({"seq", std::to_string(k)});
      if (v.is_string()) {
        const auto found = out.space.find(v.get<std::string>());
        if (!found) {
          fail(source, where, "unknown label '" + v.get<std::string>() + "'");
        }
        seq.push_back(*found);
      } else if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
        const auto idx = v.get<std::size_t>();
        if (idx >= n) {
          fail(source, where, "index out of range");
        }
        seq.push_back(idx);
      } else {
        fail(source, where, "expected an index or a label");
      }
    }
    out.seq = std::move(seq);
  }

  if (const auto it = doc.find("total"); it != doc.end()) {
    if (!it->is_boolean()) {
      fail(source, "/total", "expected a boolean");
    }
    out.total = it->get<bool>();
  }

  if (const auto it = doc.find("coords"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) {
      fail(source, "/coords", "expected one coordinate row per label");
    }
    std::vector<std::vector<double>> coords;
    for (std::size_t i = 0; i < n; ++i) {
      const json& row = (*it)[i];
      if (!row.is_array() || row.empty() || (i > 0 && row.size() != coords.front().size())) {
        fail(source, pointer({"coords", std::to_string(i)}),
             "coordinate rows must be nonempty and of equal length");
      }
      std::vector<double> c;
      for (std::size_t k = 0; k < row.size(); ++k) {
        c.push_back(number_at(row[k], source, pointer({"coords", std::to_string(i), std::to_string(k)})));
      }
      coords.push_back(std::move(c));
    }
    out.coords = std::move(coords);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInput(path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpaceDocument load_space(const std::string& path) {
  return parse_space(read_text_file(path), path);
}

std::string dump_space(const SpaceDocument& doc, int indent) {
  const FiniteLorentzSpace& s = doc.space;
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["format"] = 1;
  out["labels"] = s.labels();
  json rows = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    rows.push_back(std::vector<double>(s.distances().row(i).begin(), s.distances().row(i).end()));
  }
  out["d"] = std::move(rows);
  out["tol"] = s.tol();
  if (doc.seq) {
    out["seq"] = *doc.seq;
  }
  if (doc.total) {
    out["total"] = true;
  }
  if (doc.coords) {
    out["coords"] = *doc.coords;
  }
  return out.dump(indent);
}

}  // namespace lms
