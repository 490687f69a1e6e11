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

#ifndef LMS_TOOLS_COMMANDS_HPP
#define LMS_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lms/cli.hpp"
#include "lms/lms.hpp"

namespace lms::cli {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json doc;
  int code = kOk;
};

/// A label if one matches, otherwise a decimal index.
PointIndex resolve_token(const FiniteLorentzSpace& space, const std::string& token);
std::vector<PointIndex> resolve_list(const FiniteLorentzSpace& space, const std::string& csv);

Json labels_json(const FiniteLorentzSpace& space, const std::vector<PointIndex>& points);
Json check_json(const FiniteLorentzSpace& space, const Check& check);
Json matrix_json(const SquareMatrix<double>& m);

Outcome cmd_check(const std::string& path);
Outcome cmd_relations(const std::string& path, std::optional<double> eps);
Outcome cmd_boundaries(const std::string& path, const std::string& hull_set,
                       const std::string& relation, std::optional<double> eps);
Outcome cmd_time(const std::string& path, const std::string& enumeration,
                 const std::string& normalize);
Outcome cmd_length(const std::string& path, const std::string& from, const std::string& to);
Outcome cmd_quotient(const std::string& path, const std::string& region, bool with_i0);
Outcome cmd_quasimetric(const std::string& path, const std::string& seq, bool total);
Outcome cmd_gh_search(const std::string& a, const std::string& b, std::size_t m, double eps,
                      std::size_t budget);
Outcome cmd_gh_certify(const std::string& experiment);
Outcome cmd_sample_minkowski(std::size_t dim, std::size_t n, const std::string& mode,
                             std::uint64_t seed);
Outcome cmd_sample_halfline(const std::string& points, std::size_t n, bool real_line);
Outcome cmd_sample_causet(const std::string& kind, std::size_t n, std::uint64_t seed,
                          double edge_probability);

}  // namespace lms::cli

#endif  // LMS_TOOLS_COMMANDS_HPP
