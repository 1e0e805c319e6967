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

#include "quadpart/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "quadpart/algorithm_a.h"
#include "quadpart/errors.h"

namespace quadpart {
namespace {

using nlohmann::ordered_json;

constexpr char kFixtures[] =
#include "quadpart_fixtures.inc"
    ;

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t SplitMix(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::vector<std::size_t>> GroupsOf(std::span<const Quad> quads) {
  std::vector<std::vector<std::size_t>> groups;
  for (const Quad& q : quads) groups.emplace_back(q.begin(), q.end());
  return groups;
}

RatioRow MakeRow(const Instance& instance, InstanceClass cls,
                 std::string algorithm, std::string policy, Rational cost,
                 const std::optional<Rational>& opt) {
  RatioRow row;
  row.instance = instance.name();
  row.instance_class = cls;
  row.k = instance.k();
  row.algorithm = std::move(algorithm);
  row.policy = std::move(policy);
  row.cost = std::move(cost);
  row.opt_cost = opt;
  if (opt && *opt != 0) {
    row.ratio = row.cost / *opt;
  } else if (opt) {
    row.ratio = Rational(1);  // both zero: every partition is optimal
  }
  if (row.ratio && row.algorithm == "match") {
    row.research_interesting = IsResearchInteresting(cls, *row.ratio);
  }
  return row;
}

std::string RatioText(const std::optional<Rational>& r) {
  return r ? FormatRational(*r) : std::string();
}

std::string DecimalText(const std::optional<Rational>& r) {
  return r ? FormatDecimal(*r) : std::string();
}

ordered_json OptionalText(const std::optional<Rational>& r) {
  return r ? ordered_json(FormatRational(*r)) : ordered_json(nullptr);
}

// Size range sampled by Compare. The dimension of the vector classes is
// kept small so that overlaps, and therefore ties, stay common.
std::pair<std::size_t, std::size_t> SampleSizes(InstanceClass cls,
                                                std::size_t k) {
  auto [lo, hi] = FeasibleSizes(cls, k);
  if (cls == InstanceClass::kGeneral || cls == InstanceClass::kOneOrTwoOnes) {
    hi = std::max(lo, std::min<std::size_t>(hi, 6));
  }
  return {lo, hi};
}

std::vector<RatioRow> EvaluateSample(const CompareOptions& options,
                                     InstanceClass cls, std::size_t index) {
  const std::size_t span = options.k_max - options.k_min + 1;
  const std::size_t k = options.k_min + index % span;
  const std::uint64_t seed = SampleSeed(options.seed, cls, index);
  const auto [lo, hi] = SampleSizes(cls, k);
  const std::size_t size = lo + SplitMix(seed ^ 0x5151) % (hi - lo + 1);

  Instance generated = Generate(cls, k, size, seed);
  std::ostringstream name;
  name << ClassName(cls) << "-k" << k << "-";
  name.width(6);
  name.fill('0');
  name << index;
  const Instance instance(generated.vectors(), name.str());
  const auto& vectors = instance.vectors();
  const InstanceClass actual = Classify(instance);

  const Rational opt = ExactOpt(vectors, options.limits).opt_cost;
  std::vector<RatioRow> rows;
  auto add_match = [&](const RunPolicy& policy, std::string label) {
    const AlgorithmAResult a = RunAlgorithmA(vectors, policy);
    if (!a.trace.IdentityHolds()) {
      throw Error(ExitCode::kVerificationFailure,
                  instance.name() + ": run trace identity violated");
    }
    rows.push_back(MakeRow(instance, actual, "match", std::move(label),
                           a.partition.total_cost, opt));
  };
  add_match(RunPolicy::Lexicographic(), "lex");
  for (std::size_t t = 0; t < options.tie_seeds; ++t) {
    const std::uint64_t tie = SplitMix(seed + t + 1);
    add_match(RunPolicy::Seeded(tie), "seed:" + std::to_string(tie));
  }
  if (options.with_greedy) {
    rows.push_back(MakeRow(instance, actual, "greedy", "",
                           Greedy(vectors).total_cost, opt));
  }
  return rows;
}

}  // namespace

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kMatch:
      return "match";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kExact:
      return "exact";
    case Algorithm::kMultiRound:
      return "multiround";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kMatch, Algorithm::kGreedy, Algorithm::kExact,
                      Algorithm::kMultiRound}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw InputError("unknown algorithm \"" + std::string(name) + "\"");
}

Rational TableUpperBound(InstanceClass c) {
  switch (c) {
    case InstanceClass::kGeneral:
    case InstanceClass::kOneOrTwoOnes:
      return Rational(3, 2);
    case InstanceClass::kTwoOnes:
      return Rational(4, 3);
    case InstanceClass::kTwoOnesDistinct:
      return Rational(13, 10);
    case InstanceClass::kTwoOnesDistinctConnected:
      return Rational(5, 4);
  }
  return 0;
}

Rational TableLowerBound(InstanceClass c) {
  switch (c) {
    case InstanceClass::kGeneral:
    case InstanceClass::kOneOrTwoOnes:
      return Rational(3, 2);
    case InstanceClass::kTwoOnes:
      return Rational(4, 3);
    case InstanceClass::kTwoOnesDistinct:
    case InstanceClass::kTwoOnesDistinctConnected:
      return Rational(5, 4);
  }
  return 0;
}

bool IsResearchInteresting(InstanceClass c, const Rational& ratio) {
  return ratio > TableLowerBound(c) && ratio <= TableUpperBound(c);
}

PolicySpec ParsePolicy(std::string_view text) {
  PolicySpec spec;
  if (text == "lex") return spec;
  if (text.starts_with("seed:")) {
    const std::string digits(text.substr(5));
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad seed in policy \"" + std::string(text) + "\"");
    }
    try {
      spec.seed = std::stoull(digits);
    } catch (const std::out_of_range&) {
      throw InputError("seed out of range in \"" + std::string(text) + "\"");
    }
    spec.kind = PolicySpec::Kind::kSeeded;
    return spec;
  }
  if (text.starts_with("forced:")) {
    const std::string path(text.substr(7));
    spec.kind = PolicySpec::Kind::kForced;
    spec.script = ParseForcedScript(ReadFile(path), path);
    return spec;
  }
  throw InputError("policy must be lex, seed:N or forced:FILE, got \"" +
                   std::string(text) + "\"");
}

TieBreakPolicy RoundPolicy(const PolicySpec& spec, std::size_t round) {
  switch (spec.kind) {
    case PolicySpec::Kind::kLexicographic:
      return TieBreakPolicy::Lexicographic();
    case PolicySpec::Kind::kSeeded:
      // Rounds 0 and 1 agree with RunPolicy::Seeded.
      if (round == 0) return TieBreakPolicy::Seeded(spec.seed);
      if (round == 1) return TieBreakPolicy::Seeded(spec.seed ^ kGolden);
      return TieBreakPolicy::Seeded(SplitMix(spec.seed + round));
    case PolicySpec::Kind::kForced:
      return spec.script.RoundPolicy(round, TieBreakPolicy::Lexicographic());
  }
  return TieBreakPolicy::Lexicographic();
}

SolutionFile Solve(const Instance& instance, const SolveOptions& options) {
  const auto& vectors = instance.vectors();
  SolutionFile out;
  out.instance = instance.name();
  out.algorithm = std::string(AlgorithmName(options.algorithm));
  switch (options.algorithm) {
    case Algorithm::kMatch: {
      RunPolicy policy;
      policy.phase_one = RoundPolicy(options.policy, 0);
      policy.phase_two = RoundPolicy(options.policy, 1);
      const AlgorithmAResult a = RunAlgorithmA(vectors, policy);
      out.groups = GroupsOf(a.partition.quads);
      out.claimed_cost = a.partition.total_cost;
      out.trace = a.trace;
      break;
    }
    case Algorithm::kGreedy: {
      GreedyOptions greedy;
      if (options.policy.kind == PolicySpec::Kind::kForced) {
        greedy.scripted_choices = options.policy.script.greedy_choices;
      }
      const QuadPartition p = Greedy(vectors, greedy);
      out.groups = GroupsOf(p.quads);
      out.claimed_cost = p.total_cost;
      break;
    }
    case Algorithm::kExact: {
      const ExactResult e = ExactOpt(vectors, options.limits);
      out.groups = GroupsOf(e.partition.quads);
      out.claimed_cost = e.opt_cost;
      break;
    }
    case Algorithm::kMultiRound: {
      std::vector<TieBreakPolicy> policies;
      for (int r = 0; r < std::max(options.rounds, 0); ++r) {
        policies.push_back(RoundPolicy(options.policy, r));
      }
      const MultiRoundResult m =
          RunMultiRound(vectors, options.rounds, policies);
      out.group_size = m.partition.group_size;
      out.groups = m.partition.groups;
      out.claimed_cost = m.partition.total_cost;
      out.round_cost = m.trace.round_cost;
      break;
    }
  }
  return out;
}

std::string_view VerifyStatusName(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kPass:
      return "pass";
    case VerifyStatus::kBadGroupSize:
      return "bad group size";
    case VerifyStatus::kIndexOutOfRange:
      return "index out of range";
    case VerifyStatus::kCoverViolation:
      return "cover violation";
    case VerifyStatus::kCostMismatch:
      return "cost mismatch";
    case VerifyStatus::kTraceMismatch:
      return "trace mismatch";
  }
  return "?";
}

VerifyReport Verify(const Instance& instance, const SolutionFile& solution) {
  const std::size_t n = instance.size();
  const std::size_t size = solution.group_size;
  VerifyReport report;
  auto fail = [&](VerifyStatus status, std::optional<std::size_t> group,
                  std::string message) {
    report.status = status;
    report.group = group;
    report.message = std::move(message);
    return report;
  };
  auto label = [](std::size_t g) { return "group " + std::to_string(g + 1); };
  if (size == 0 || n % size != 0) {
    return fail(VerifyStatus::kBadGroupSize, std::nullopt,
                "group size " + std::to_string(size) + " does not divide " +
                    std::to_string(n));
  }
  std::vector<std::size_t> owner(n, kInvalidIndex);
  for (std::size_t g = 0; g < solution.groups.size(); ++g) {
    const auto& members = solution.groups[g];
    if (members.size() != size) {
      return fail(VerifyStatus::kBadGroupSize, g,
                  label(g) + " has " + std::to_string(members.size()) +
                      " members, expected " + std::to_string(size));
    }
    for (std::size_t i : members) {
      if (i >= n) {
        return fail(
            VerifyStatus::kIndexOutOfRange, g,
            label(g) + " references a vector outside 1.." + std::to_string(n));
      }
      if (owner[i] != kInvalidIndex) {
        return fail(VerifyStatus::kCoverViolation, g,
                    label(g) + " reuses vector " + std::to_string(i + 1) +
                        " from " + label(owner[i]));
      }
      owner[i] = g;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] == kInvalidIndex) {
      return fail(VerifyStatus::kCoverViolation, std::nullopt,
                  "vector " + std::to_string(i + 1) + " is in no group");
    }
  }
  for (const auto& members : solution.groups) {
    std::vector<DenseVector> group;
    for (std::size_t i : members) group.push_back(instance.vectors()[i]);
    report.recomputed_cost += GroupCost(group);
  }
  if (report.recomputed_cost != solution.claimed_cost) {
    return fail(VerifyStatus::kCostMismatch, std::nullopt,
                "claimed cost " + FormatRational(solution.claimed_cost) +
                    " but the groups cost " +
                    FormatRational(report.recomputed_cost));
  }
  if (solution.trace &&
      (!solution.trace->IdentityHolds() ||
       solution.trace->result_cost != report.recomputed_cost)) {
    return fail(VerifyStatus::kTraceMismatch, std::nullopt,
                "trace does not account for the claimed cost");
  }
  if (!solution.round_cost.empty() &&
      solution.round_cost.back() != report.recomputed_cost) {
    return fail(VerifyStatus::kTraceMismatch, std::nullopt,
                "last round cost " +
                    FormatRational(solution.round_cost.back()) +
                    " differs from the claimed cost");
  }
  report.message = "pass, cost " + FormatRational(report.recomputed_cost);
  return report;
}

void RatioReport::Finalize() {
  std::sort(rows.begin(), rows.end(), [](const RatioRow& a, const RatioRow& b) {
    return std::tie(a.instance_class, a.instance, a.algorithm, a.policy) <
           std::tie(b.instance_class, b.instance, b.algorithm, b.policy);
  });
  std::map<std::pair<InstanceClass, std::string>, ClassAggregate> groups;
  for (const RatioRow& row : rows) {
    ClassAggregate& agg = groups[{row.instance_class, row.algorithm}];
    agg.instance_class = row.instance_class;
    agg.algorithm = row.algorithm;
    ++agg.rows;
    if (row.ratio && (!agg.max_ratio || *row.ratio > *agg.max_ratio)) {
      agg.max_ratio = row.ratio;
    }
    if (row.research_interesting) ++agg.research_interesting;
  }
  aggregates.clear();
  for (auto& [key, agg] : groups) {
    if (agg.algorithm == "match") {
      agg.upper_bound = TableUpperBound(agg.instance_class);
      agg.pass = !agg.max_ratio || *agg.max_ratio <= *agg.upper_bound;
    }
    aggregates.push_back(std::move(agg));
  }
}

bool RatioReport::pass() const {
  return std::all_of(aggregates.begin(), aggregates.end(),
                     [](const ClassAggregate& a) { return a.pass; });
}

std::string RatioReport::RowsCsv() const {
  std::ostringstream out;
  out << "instance,class,k,algorithm,policy,cost,opt_cost,ratio,"
         "ratio_decimal,research_interesting\n";
  for (const RatioRow& r : rows) {
    out << r.instance << ',' << ClassName(r.instance_class) << ',' << r.k << ','
        << r.algorithm << ',' << r.policy << ',' << FormatRational(r.cost)
        << ',' << RatioText(r.opt_cost) << ',' << RatioText(r.ratio) << ','
        << DecimalText(r.ratio) << ','
        << (r.research_interesting ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string RatioReport::AggregatesCsv() const {
  std::ostringstream out;
  out << "class,algorithm,rows,max_ratio,max_ratio_decimal,upper_bound,"
         "research_interesting,pass\n";
  for (const ClassAggregate& a : aggregates) {
    out << ClassName(a.instance_class) << ',' << a.algorithm << ',' << a.rows
        << ',' << RatioText(a.max_ratio) << ',' << DecimalText(a.max_ratio)
        << ',' << RatioText(a.upper_bound) << ',' << a.research_interesting
        << ',' << (a.pass ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string RatioReport::ToJson() const {
  ordered_json doc;
  doc["pass"] = pass();
  ordered_json aggs = ordered_json::array();
  for (const ClassAggregate& a : aggregates) {
    aggs.push_back({{"class", ClassName(a.instance_class)},
                    {"algorithm", a.algorithm},
                    {"rows", a.rows},
                    {"max_ratio", OptionalText(a.max_ratio)},
                    {"max_ratio_decimal", DecimalText(a.max_ratio)},
                    {"upper_bound", OptionalText(a.upper_bound)},
                    {"research_interesting", a.research_interesting},
                    {"pass", a.pass}});
  }
  doc["aggregates"] = std::move(aggs);
  ordered_json list = ordered_json::array();
  for (const RatioRow& r : rows) {
    list.push_back({{"instance", r.instance},
                    {"class", ClassName(r.instance_class)},
                    {"k", r.k},
                    {"algorithm", r.algorithm},
                    {"policy", r.policy},
                    {"cost", FormatRational(r.cost)},
                    {"opt_cost", OptionalText(r.opt_cost)},
                    {"ratio", OptionalText(r.ratio)},
                    {"ratio_decimal", DecimalText(r.ratio)},
                    {"research_interesting", r.research_interesting}});
  }
  doc["rows"] = std::move(list);
  return doc.dump(2) + "\n";
}

bool ReproResult::ok() const {
  return !cases.empty() &&
         std::all_of(cases.begin(), cases.end(),
                     [](const ReproCase& c) { return c.ok(); });
}

std::string_view ReproFixtures() { return kFixtures; }

ReproResult Repro() { return Repro(ReproFixtures()); }

ReproResult Repro(std::string_view fixtures_json) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(fixtures_json.begin(), fixtures_json.end());
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("repro fixtures: ") + e.what());
  }
  if (!doc.contains("cases") || !doc["cases"].is_array()) {
    throw InputError("repro fixtures: missing \"cases\" array");
  }
  ReproResult result;
  for (const auto& entry : doc["cases"]) {
    const std::string name = entry.at("instance").get<std::string>();
    const Instance instance = BuiltinInstance(name);
    const auto& vectors = instance.vectors();
    const ForcedScript script =
        ParseForcedScript(entry.at("script").dump(), "fixture " + name);

    ReproCase c;
    c.instance = name;
    c.algorithm = entry.at("algorithm").get<std::string>();
    c.expected_cost = ParseRational(entry.at("expected_cost").dump());
    c.expected_opt = ParseRational(entry.at("expected_opt").dump());

    if (c.algorithm == "match") {
      if (script.rounds.empty() || !script.rounds[0]) {
        throw InputError("fixture " + name + ": no phase-one matching");
      }
      const std::vector<NodePair>& pairs = *script.rounds[0];
      const auto graph = CompleteWeightedGraph::JoinCost(vectors);
      PerfectMatching forced{pairs, 0};
      for (const NodePair& p : pairs) {
        forced.total_cost += graph.weight(p.first, p.second);
      }
      if (!VerifyOptimal(graph, forced, OptimalityOracle::kBruteForce)) {
        throw OptimalityError("fixture " + name +
                              ": phase-one matching is not optimal");
      }
      const PhaseOnePairing one =
          PhaseOne(vectors, TieBreakPolicy::Forced(pairs));
      const AlgorithmAResult a = PhaseTwo(
          vectors, one, script.RoundPolicy(1, TieBreakPolicy::Lexicographic()));
      const Rational phase_two_optimum =
          BruteForceMatching(CompleteWeightedGraph::JoinCost(one.merged))
              .total_cost;
      if (a.partition.total_cost != phase_two_optimum ||
          !a.trace.IdentityHolds()) {
        throw OptimalityError("fixture " + name +
                              ": phase-two matching is not optimal");
      }
      c.cost = a.partition.total_cost;
    } else if (c.algorithm == "greedy") {
      GreedyOptions options;
      options.scripted_choices = script.greedy_choices;
      c.cost = Greedy(vectors, options).total_cost;
    } else {
      throw InputError("fixture " + name + ": unknown algorithm " +
                       c.algorithm);
    }
    c.opt = ExactOpt(vectors).opt_cost;
    result.report.rows.push_back(MakeRow(instance, Classify(instance),
                                         c.algorithm, "forced", c.cost, c.opt));
    result.cases.push_back(std::move(c));
  }
  result.report.Finalize();
  return result;
}

std::uint64_t SampleSeed(std::uint64_t seed, InstanceClass c,
                         std::size_t index) {
  return SplitMix(SplitMix(seed ^ (static_cast<std::uint64_t>(c) << 56)) +
                  index);
}

RatioReport Compare(const CompareOptions& options) {
  if (options.k_min < 1 || options.k_min > options.k_max) {
    throw InputError("need 1 <= k_min <= k_max");
  }
  if (options.k_max > options.limits.max_k) {
    throw SizeError("k_max " + std::to_string(options.k_max) +
                    " exceeds the exact-solver limit " +
                    std::to_string(options.limits.max_k));
  }
  std::vector<std::pair<InstanceClass, std::size_t>> tasks;
  for (InstanceClass cls : options.classes) {
    for (std::size_t i = 0; i < options.samples; ++i) tasks.push_back({cls, i});
  }
  std::vector<std::vector<RatioRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      try {
        results[t] = EvaluateSample(options, tasks[t].first, tasks[t].second);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  RatioReport report;
  for (auto& rows : results) {
    for (RatioRow& row : rows) report.rows.push_back(std::move(row));
  }
  report.Finalize();
  return report;
}

}  // namespace quadpart
