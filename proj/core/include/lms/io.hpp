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

#ifndef LMS_IO_HPP
#define LMS_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lms/space.hpp"

namespace lms {

/// Contents of a space file:
///   {"labels": [...], "d": [[...], ...], "tol": t?, "seq": [...]?, "total": b?, "coords": [[t, x...], ...]?}
/// Sequence entries may be indices or labels.
struct SpaceDocument {
  FiniteLorentzSpace space;
  std::optional<std::vector<PointIndex>> seq;
  bool total = false;
  std::optional<std::vector<std::vector<double>>> coords;

  /// Throws if the document carries no sequence.
  SequencedSpace sequenced() const;
};

/// Parse errors report a byte offset; content errors a JSON pointer such as /d/2/1.
SpaceDocument parse_space(std::string_view text, std::string_view source = "<input>");
SpaceDocument load_space(const std::string& path);

/// Serializes with a "format": 1 field. Numbers use the shortest text that
/// reads back to the same double.
std::string dump_space(const SpaceDocument& doc, int indent = -1);

std::string read_text_file(const std::string& path);

}  // namespace lms

#endif  // LMS_IO_HPP
