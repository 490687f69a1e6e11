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

#ifndef LMS_TOOLS_CLI_HPP
#define LMS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lms::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRefuted = 2,
  kInconclusive = 3,
};

/// Runs the command line `args` (args[0] is the program name). Writes one
/// JSON document to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lms::cli

#endif  // LMS_TOOLS_CLI_HPP
