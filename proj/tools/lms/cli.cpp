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

#include "lms/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "lms/commands.hpp"
#include "lms/parallel.hpp"

namespace lms::cli {

namespace {

void emit_error(std::ostream& out, std::ostream& err, const std::string& message) {
  out << Json{{"format", 1}, {"error", message}}.dump(2) << '\n';
  err << "lms: " << message << '\n';
}

std::optional<std::size_t> env_threads() {
  const char* v = std::getenv("LMS_THREADS");
  if (v == nullptr || *v == '\0') {
    return std::nullopt;
  }
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0') {
    throw InvalidInput(std::string("LMS_THREADS is not a nonnegative integer: '") + v + "'");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Lorentzian metric spaces: causal structure, time functions, chains, "
               "and Gromov-Hausdorff certification."};
  app.name("lms");
  app.require_subcommand(1);
  app.set_version_flag("--version", "lms 0.1.0");
  // Global options may follow the subcommand too.
  app.fallthrough();

  std::optional<std::size_t> threads;
  bool compact = false;
  app.add_option("--threads", threads, "Worker threads, 0 for all cores (default LMS_THREADS or 1)");
  app.add_flag("--compact", compact, "Print JSON on one line");

  std::function<Outcome()> action;
  std::string path;

  auto* check = app.add_subcommand("check", "Validate the axioms and causal properties");
  check->add_option("space", path, "Space file")->required();
  check->callback([&] { action = [&] { return cmd_check(path); }; });

  std::optional<double> eps;
  auto* relations = app.add_subcommand("relations", "List chronology and causal pairs");
  relations->add_option("space", path, "Space file")->required();
  relations->add_option("--eps", eps, "Also list d >= eps pairs")->check(CLI::PositiveNumber);
  relations->callback([&] { action = [&] { return cmd_relations(path, eps); }; });

  std::string hull_set;
  std::string relation = "chronology";
  auto* bounds = app.add_subcommand("boundaries", "Future and past boundaries, interior, hulls");
  bounds->add_option("space", path, "Space file")->required();
  bounds->add_option("--hull", hull_set, "Comma-separated points whose hull to compute");
  bounds->add_option("--relation", relation, "chronology, causal or chronology_eps")
      ->check(CLI::IsMember({"chronology", "causal", "chronology_eps"}));
  bounds->add_option("--eps", eps, "Threshold for chronology_eps")->check(CLI::PositiveNumber);
  bounds->callback(
      [&] { action = [&] { return cmd_boundaries(path, hull_set, relation, eps); }; });

  std::string enumeration;
  std::string normalize;
  auto* time = app.add_subcommand("time", "Evaluate the time function");
  time->add_option("space", path, "Space file")->required();
  time->add_option("--enumeration", enumeration, "Comma-separated enumeration x_1, x_2, ...");
  time->add_option("--normalize", normalize, "Two points x,y mapped to 0 and 1");
  time->callback([&] { action = [&] { return cmd_time(path, enumeration, normalize); }; });

  std::string from;
  std::string to;
  auto* length = app.add_subcommand("length", "Chain length function and length property");
  length->add_option("space", path, "Space file")->required();
  length->add_option("--from", from, "Chain start");
  length->add_option("--to", to, "Chain end");
  length->callback([&] { action = [&] { return cmd_length(path, from, to); }; });

  std::string region;
  bool with_i0 = false;
  auto* quot = app.add_subcommand("quotient", "Quotient of a region by indistinguishability");
  quot->add_option("space", path, "Space file")->required();
  quot->add_option("--region", region, "Comma-separated region (default all points)");
  quot->add_flag("--with-i0", with_i0, "Export the spacelike kernel as an extra point i0");
  quot->callback([&] { action = [&] { return cmd_quotient(path, region, with_i0); }; });

  std::string seq;
  bool total = false;
  auto* qm = app.add_subcommand("quasimetric", "Quasi-metric p and metric gamma");
  qm->add_option("space", path, "Space file")->required();
  qm->add_option("--seq", seq, "Comma-separated anchor sequence (overrides the file)");
  qm->add_flag("--total", total, "Treat every truncation as the whole space");
  qm->callback([&] { action = [&] { return cmd_quasimetric(path, seq, total); }; });

  auto* gh = app.add_subcommand("gh", "Quasi-correspondences and convergence certificates");
  gh->require_subcommand(1);

  std::string other;
  std::size_t m = 1;
  double gh_eps = 0.0;
  std::size_t budget = SearchOptions{}.budget;
  auto* search = gh->add_subcommand("search", "Search an (m, eps) quasi-correspondence");
  search->add_option("x", path, "Sequenced space file")->required();
  search->add_option("y", other, "Sequenced space file")->required();
  search->add_option("-m,--m", m, "Order m")->required()->check(CLI::PositiveNumber);
  search->add_option("--eps", gh_eps, "Distortion budget")->required()->check(
      CLI::NonNegativeNumber);
  search->add_option("--budget", budget, "Branch-and-bound node budget");
  search->callback([&] { action = [&] { return cmd_gh_search(path, other, m, gh_eps, budget); }; });

  auto* certify = gh->add_subcommand("certify", "Run a convergence experiment");
  certify->add_option("experiment", path, "Experiment file")->required();
  certify->callback([&] { action = [&] { return cmd_gh_certify(path); }; });

  std::string output;
  auto* sample = app.add_subcommand("sample", "Generate model spaces");
  sample->require_subcommand(1);
  sample->add_option("-o,--output", output, "Write the space here and print a summary");

  std::size_t dim = 2;
  std::size_t n = 5;
  std::string mode = "grid";
  std::uint64_t seed = 0;
  auto* mink = sample->add_subcommand("minkowski", "Causal diamond in Minkowski space");
  mink->add_option("--dim", dim, "Spacetime dimension")->check(CLI::Range(2, 8));
  mink->add_option("-n,--n", n, "Grid points per axis, or Poisson sample size")
      ->check(CLI::PositiveNumber);
  mink->add_option("--mode", mode, "grid or poisson")->check(CLI::IsMember({"grid", "poisson"}));
  mink->add_option("--seed", seed, "SplitMix64 seed");
  mink->callback([&] { action = [&] { return cmd_sample_minkowski(dim, n, mode, seed); }; });

  std::string points;
  bool real_line = false;
  std::size_t index = 1;
  auto* half = sample->add_subcommand("halfline", "Points of the half-line or real line");
  half->add_option("--points", points, "Comma-separated coordinates")->required();
  half->add_option("-n,--n", index, "Sequence index n of the half-line family")
      ->check(CLI::PositiveNumber);
  half->add_flag("--real", real_line, "Use the real-line sequence instead");
  half->callback([&] { action = [&] { return cmd_sample_halfline(points, index, real_line); }; });

  std::string kind = "links";
  double probability = 0.5;
  auto* causet = sample->add_subcommand("causet", "Weighted causal set");
  causet->add_option("--kind", kind, "links, chain or antichain")
      ->check(CLI::IsMember({"links", "chain", "antichain"}));
  causet->add_option("-n,--n", n, "Number of points")->check(CLI::PositiveNumber);
  causet->add_option("--seed", seed, "SplitMix64 seed");
  causet->add_option("-p", probability, "Edge probability")->check(CLI::Range(0.0, 1.0));
  causet->callback([&] { action = [&] { return cmd_sample_causet(kind, n, seed, probability); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, e.what());
    return kUsage;
  }

  try {
    if (!threads) {
      threads = env_threads();
    }
    set_max_threads(threads.value_or(1));
    Outcome outcome = action();
    const int indent = compact ? -1 : 2;
    if (sample->parsed() && !output.empty()) {
      std::ofstream file(output);
      file << outcome.doc.dump(indent) << '\n';
      if (!file) {
        throw InvalidInput("cannot write '" + output + "'");
      }
      const std::size_t size = outcome.doc["labels"].size();
      outcome.doc = Json{{"format", 1}, {"command", "sample"}, {"output", output},
                         {"points", size}};
    }
    out << outcome.doc.dump(indent) << '\n';
    return outcome.code;
  } catch (const std::exception& e) {
    emit_error(out, err, e.what());
    return kUsage;
  }
}

}  // namespace lms::cli
