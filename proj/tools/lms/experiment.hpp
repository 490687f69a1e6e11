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

#ifndef LMS_TOOLS_EXPERIMENT_HPP
#define LMS_TOOLS_EXPERIMENT_HPP

#include <string>
#include <string_view>

#include "lms/gh.hpp"

namespace lms::cli {

/// A parsed certification experiment, ready for certify_gh_convergence.
struct Experiment {
  std::string name;
  SpaceProvider provider;
  SequencedSpace target;
  GHSchedule schedule;
  CertifyOptions options;
};

/// Relative paths inside the document resolve against `base_dir`.
Experiment parse_experiment(std::string_view text, const std::string& base_dir,
                            std::string_view source = "<input>");
Experiment load_experiment(const std::string& path);

}  // namespace lms::cli

#endif  // LMS_TOOLS_EXPERIMENT_HPP
