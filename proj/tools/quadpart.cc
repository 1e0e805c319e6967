// Copyright 2026 The quadpart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quadpart: partition vectors into quads of minimum total join weight.
//
//   quadpart solve   --input FILE|builtin:NAME [--algo A] [--policy P]
//   quadpart verify  --input FILE --solution FILE
//   quadpart gen     --class C --k K [--size N] [--seed S]
//   quadpart compare [--class C]... [--k K|A-B] [--samples N] [--seed S]
//   quadpart repro
//
// Exit codes: 0 success, 1 input error, 2 verification failure,
// 3 resource limit.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "quadpart/errors.h"
#include "quadpart/harness.h"
#include "quadpart/instance.h"
#include "quadpart/io.h"

namespace {

using quadpart::ExitCode;

struct Output {
  std::string path;  // empty = stdout

  void Write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
    } else {
      quadpart::WriteFile(path, text);
    }
  }
};

quadpart::SearchLimits LimitsFromEnv() {
  quadpart::SearchLimits limits;
  if (const char* env = std::getenv("QUADPART_NODE_BUDGET")) {
    const std::string text(env);
    if (text.empty() ||
        text.find_first_not_of("0123456789") != std::string::npos) {
      throw quadpart::InputError(
          "QUADPART_NODE_BUDGET must be a nonnegative "
          "integer, got \"" +
          text + "\"");
    }
    limits.node_budget = std::stoull(text);
  }
  return limits;
}

std::pair<std::size_t, std::size_t> ParseKRange(const std::string& text) {
  const std::size_t dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      const std::size_t k = std::stoul(text);
      return {1, k};
    }
    return {std::stoul(text.substr(0, dash)),
            std::stoul(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw quadpart::InputError("--k expects K or A-B, got \"" + text + "\"");
  }
}

struct SolveArgs {
  std::string input;
  std::string algo = "match";
  std::string policy = "lex";
  int rounds = 2;
  Output output;
};

int RunSolve(const SolveArgs& args) {
  const quadpart::Instance instance = quadpart::LoadInstance(args.input);
  quadpart::SolveOptions options;
  options.algorithm = quadpart::ParseAlgorithm(args.algo);
  options.policy = quadpart::ParsePolicy(args.policy);
  options.rounds = args.rounds;
  options.limits = LimitsFromEnv();
  quadpart::SolutionFile solution = quadpart::Solve(instance, options);
  if (solution.instance.empty()) solution.instance = args.input;
  args.output.Write(quadpart::SerializeSolution(solution));
  std::cerr << solution.algorithm << " cost "
            << quadpart::FormatRational(solution.claimed_cost) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string input;
  std::string solution;
};

int RunVerify(const VerifyArgs& args) {
  const quadpart::Instance instance = quadpart::LoadInstance(args.input);
  const quadpart::SolutionFile solution =
      quadpart::ParseSolution(quadpart::ReadFile(args.solution), args.solution);
  const quadpart::VerifyReport report = quadpart::Verify(instance, solution);
  if (report.ok()) {
    std::cout << "PASS cost "
              << quadpart::FormatRational(report.recomputed_cost) << "\n";
    return 0;
  }
  std::cout << "FAIL " << quadpart::VerifyStatusName(report.status) << ": "
            << report.message << "\n";
  return static_cast<int>(ExitCode::kVerificationFailure);
}

struct GenArgs {
  std::string cls;
  std::size_t k = 1;
  std::optional<std::size_t> size;
  std::uint64_t seed = 1;
  std::string name;
  Output output;
};

int RunGen(const GenArgs& args) {
  const quadpart::InstanceClass cls = quadpart::ParseClass(args.cls);
  std::size_t size = 0;
  if (args.size) {
    size = *args.size;
  } else {
    const auto [lo, hi] = quadpart::FeasibleSizes(cls, args.k);
    const bool vector_class = cls == quadpart::InstanceClass::kGeneral ||
                              cls == quadpart::InstanceClass::kOneOrTwoOnes;
    size = vector_class ? std::clamp<std::size_t>(4, lo, hi) : lo;
  }
  const quadpart::Instance generated =
      quadpart::Generate(cls, args.k, size, args.seed);
  const quadpart::Instance named(
      generated.vectors(), args.name.empty()
                               ? args.cls + "-k" + std::to_string(args.k) +
                                     "-n" + std::to_string(size) + "-s" +
                                     std::to_string(args.seed)
                               : args.name);
  args.output.Write(quadpart::SerializeInstance(named));
  return 0;
}

struct CompareArgs {
  std::vector<std::string> classes;
  std::string k = "4";
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t tie_seeds = 5;
  std::size_t threads = 0;
  bool no_greedy = false;
  std::string format = "json";
  Output output;
};

int RunCompare(const CompareArgs& args) {
  quadpart::CompareOptions options;
  if (!args.classes.empty()) {
    options.classes.clear();
    for (const std::string& c : args.classes) {
      options.classes.push_back(quadpart::ParseClass(c));
    }
  }
  std::tie(options.k_min, options.k_max) = ParseKRange(args.k);
  options.samples = args.samples;
  options.seed = args.seed;
  options.tie_seeds = args.tie_seeds;
  options.threads = args.threads;
  options.with_greedy = !args.no_greedy;
  options.limits = LimitsFromEnv();
  const quadpart::RatioReport report = quadpart::Compare(options);
  args.output.Write(args.format == "csv" ? report.RowsCsv() : report.ToJson());
  std::cerr << report.AggregatesCsv();
  return report.pass() ? 0 : static_cast<int>(ExitCode::kVerificationFailure);
}

struct ReproArgs {
  std::string format = "csv";
  Output output;
};

int RunRepro(const ReproArgs& args) {
  const quadpart::ReproResult result = quadpart::Repro();
  args.output.Write(args.format == "json" ? result.report.ToJson()
                                          : result.report.RowsCsv());
  for (const quadpart::ReproCase& c : result.cases) {
    std::cerr << (c.ok() ? "PASS " : "FAIL ") << c.instance << " "
              << c.algorithm << "=" << quadpart::FormatRational(c.cost)
              << " opt=" << quadpart::FormatRational(c.opt) << " (expected "
              << quadpart::FormatRational(c.expected_cost) << ", "
              << quadpart::FormatRational(c.expected_opt) << ")\n";
  }
  return result.ok() ? 0 : static_cast<int>(ExitCode::kVerificationFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition vectors into quads of minimum total join weight."};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "csv"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("--input", solve.input, "Instance file or builtin:NAME")
      ->required();
  solve_cmd->add_option("--algo", solve.algo, "match|greedy|exact|multiround")
      ->check(CLI::IsMember({"match", "greedy", "exact", "multiround"}));
  solve_cmd->add_option("--policy", solve.policy, "lex|seed:N|forced:FILE");
  solve_cmd->add_option("--rounds", solve.rounds, "Rounds for multiround");
  solve_cmd->add_option("--output", solve.output.path, "Solution file");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a solution against its instance");
  verify_cmd
      ->add_option("--input", verify.input, "Instance file or builtin:NAME")
      ->required();
  verify_cmd->add_option("--solution", verify.solution, "Solution file")
      ->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--class", gen.cls, "Instance class")->required();
  gen_cmd->add_option("--k", gen.k, "Number of quads")->required();
  gen_cmd->add_option("--size", gen.size, "Dimension or node count");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--name", gen.name, "Instance name");
  gen_cmd->add_option("--output", gen.output.path, "Instance file");

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Measure ratios against the optimum");
  compare_cmd->add_option("--class", compare.classes,
                          "Instance class (repeatable; default all)");
  compare_cmd->add_option("--k", compare.k, "Max k, or a range A-B");
  compare_cmd->add_option("--samples", compare.samples, "Instances per class");
  compare_cmd->add_option("--seed", compare.seed, "Run seed");
  compare_cmd->add_option("--tie-seeds", compare.tie_seeds,
                          "Seeded runs of A per instance");
  compare_cmd->add_option("--threads", compare.threads, "Workers (0 = auto)");
  compare_cmd->add_flag("--no-greedy", compare.no_greedy, "Skip greedy");
  compare_cmd->add_option("--format", compare.format, "json|csv")
      ->check(CLI::IsMember(formats));
  compare_cmd->add_option("--output", compare.output.path, "Report file");

  ReproArgs repro;
  auto* repro_cmd =
      app.add_subcommand("repro", "Replay the built-in bad instances");
  repro_cmd->add_option("--format", repro.format, "json|csv")
      ->check(CLI::IsMember(formats));
  repro_cmd->add_option("--output", repro.output.path, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : static_cast<int>(ExitCode::kInputError);
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*verify_cmd) return RunVerify(verify);
    if (*gen_cmd) return RunGen(gen);
    if (*compare_cmd) return RunCompare(compare);
    if (*repro_cmd) return RunRepro(repro);
  } catch (const quadpart::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return static_cast<int>(ExitCode::kResourceLimit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kInputError);
  }
  return static_cast<int>(ExitCode::kInputError);
}
