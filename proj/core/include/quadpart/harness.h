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

#ifndef QUADPART_HARNESS_H_
#define QUADPART_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadpart/baselines.h"
#include "quadpart/instance.h"
#include "quadpart/io.h"
#include "quadpart/matching.h"
#include "quadpart/rational.h"

namespace quadpart {

enum class Algorithm { kMatch, kGreedy, kExact, kMultiRound };

std::string_view AlgorithmName(Algorithm a);
// Accepts match, greedy, exact, multiround. Throws InputError otherwise.
Algorithm ParseAlgorithm(std::string_view name);

// Worst-case ratio bounds of algorithm A per class.
Rational TableUpperBound(InstanceClass c);
Rational TableLowerBound(InstanceClass c);

// --policy value: "lex", "seed:N" or "forced:FILE".
struct PolicySpec {
  enum class Kind { kLexicographic, kSeeded, kForced };
  Kind kind = Kind::kLexicographic;
  std::uint64_t seed = 0;
  ForcedScript script;
};

// Reads the forced script from disk for "forced:FILE".
PolicySpec ParsePolicy(std::string_view text);

// Tie-breaking for round r (0-based) of match / multiround.
TieBreakPolicy RoundPolicy(const PolicySpec& spec, std::size_t round);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kMatch;
  PolicySpec policy;
  int rounds = 2;  // multiround only
  SearchLimits limits;
};

// Runs one algorithm and packages the answer. `trace` is set for match and
// `round_cost` for multiround.
SolutionFile Solve(const Instance& instance, const SolveOptions& options);

enum class VerifyStatus {
  kPass,
  kBadGroupSize,
  kIndexOutOfRange,
  kCoverViolation,
  kCostMismatch,
  kTraceMismatch,
};

std::string_view VerifyStatusName(VerifyStatus s);

struct VerifyReport {
  VerifyStatus status = VerifyStatus::kPass;
  std::optional<std::size_t> group;  // first offending group, 0-based
  Rational recomputed_cost = 0;
  std::string message;

  bool ok() const { return status == VerifyStatus::kPass; }
};

// Checks the groups form an exact cover by sets of `group_size`, then
// recomputes the cost. Checks run in that order and stop at the first
// failure.
VerifyReport Verify(const Instance& instance, const SolutionFile& solution);

struct RatioRow {
  std::string instance;
  InstanceClass instance_class = InstanceClass::kGeneral;
  std::size_t k = 0;
  std::string algorithm;
  std::string policy;  // empty when the algorithm has no tie-breaking
  Rational cost = 0;
  std::optional<Rational> opt_cost;
  std::optional<Rational> ratio;  // cost / opt_cost, present iff opt_cost
  bool research_interesting = false;
};

// Ratio of A beyond the proven lower bound but within the upper bound; only
// possible where the two bounds differ.
bool IsResearchInteresting(InstanceClass c, const Rational& ratio);

struct ClassAggregate {
  InstanceClass instance_class = InstanceClass::kGeneral;
  std::string algorithm;
  std::size_t rows = 0;
  std::optional<Rational> max_ratio;
  std::optional<Rational> upper_bound;  // algorithm A only
  std::size_t research_interesting = 0;
  bool pass = true;  // max_ratio <= upper_bound
};

struct RatioReport {
  std::vector<RatioRow> rows;
  std::vector<ClassAggregate> aggregates;

  // Sorts rows canonically and recomputes the aggregates.
  void Finalize();
  bool pass() const;

  // Header plus one line per row. Ratios are "p/q"; ratio_decimal is a
  // rounded convenience copy.
  std::string RowsCsv() const;
  std::string AggregatesCsv() const;
  std::string ToJson() const;
};

struct ReproCase {
  std::string instance;
  std::string algorithm;
  Rational cost = 0;
  Rational opt = 0;
  Rational expected_cost = 0;
  Rational expected_opt = 0;

  bool ok() const { return cost == expected_cost && opt == expected_opt; }
};

struct ReproResult {
  std::vector<ReproCase> cases;
  RatioReport report;

  bool ok() const;
};

// Replays the built-in bad instances with their fixture matchings and
// greedy scripts. Every fixture matching is checked against the
// brute-force oracle first; a stale one raises OptimalityError.
ReproResult Repro();

// Same, with fixtures from JSON text in the embedded format.
ReproResult Repro(std::string_view fixtures_json);

// The embedded fixture file.
std::string_view ReproFixtures();

struct CompareOptions {
  std::vector<InstanceClass> classes{std::begin(kAllClasses),
                                     std::end(kAllClasses)};
  std::size_t k_min = 1;
  std::size_t k_max = 4;
  std::size_t samples = 100;  // per class
  std::uint64_t seed = 1;
  std::size_t tie_seeds = 5;  // seeded runs of A besides the lexicographic one
  bool with_greedy = true;
  std::size_t threads = 0;  // 0 = hardware concurrency
  SearchLimits limits;
};

// Generates `samples` instances per class with k cycling over
// [k_min, k_max], runs A under every policy plus greedy, and compares each
// against the exact optimum. Deterministic for fixed options regardless of
// the thread count.
RatioReport Compare(const CompareOptions& options);

// Per-instance seed derived from the run seed, class and sample index.
std::uint64_t SampleSeed(std::uint64_t seed, InstanceClass c,
                         std::size_t index);

}  // namespace quadpart

#endif  // QUADPART_HARNESS_H_
