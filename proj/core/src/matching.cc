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

#include "quadpart/matching.h"

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "blossom.h"
#include "quadpart/errors.h"

namespace quadpart {
namespace {

// Perturbation range for seeded tie-breaking. Each edge gets noise in
// [0, kNoiseRange); costs are multiplied by (n/2) * kNoiseRange + 1 so the
// noise summed over any perfect matching stays below one cost unit.
constexpr std::int64_t kNoiseRange = 1024;

void RequireEven(std::size_t n) {
  if (n % 2 != 0) {
    throw InputError("perfect matching needs an even node count, got " +
                     std::to_string(n));
  }
}

std::vector<NodePair> SolveBlossom(const CostMatrix& costs,
                                   const std::vector<std::int64_t>& noise,
                                   std::int64_t multiplier) {
  const std::size_t n = costs.size();
  std::int64_t max_cost = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      max_cost = std::max(max_cost, costs(i, j));
    }
  }
  const std::int64_t ceiling = (max_cost + 1) * multiplier;
  std::vector<internal::WeightedEdge> edges;
  edges.reserve(n * (n - 1) / 2);
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++e) {
      const std::int64_t perturbed =
          costs(i, j) * multiplier + (noise.empty() ? 0 : noise[e]);
      edges.push_back(
          {static_cast<int>(i), static_cast<int>(j), ceiling - perturbed});
    }
  }
  const std::vector<int> mate =
      internal::MaxWeightMatching(static_cast<int>(n), edges, true);
  std::vector<NodePair> pairs;
  for (std::size_t v = 0; v < n; ++v) {
    if (mate[v] < 0) {
      throw Error(ExitCode::kVerificationFailure,
                  "internal error: blossom left node " + std::to_string(v) +
                      " unmatched");
    }
    if (static_cast<std::size_t>(mate[v]) > v) {
      pairs.push_back({v, static_cast<std::size_t>(mate[v])});
    }
  }
  return pairs;
}

std::vector<NodePair> EngineMatching(const CostMatrix& costs,
                                     const TieBreakPolicy& policy) {
  const std::size_t n = costs.size();
  if (policy.mode() != TieBreakPolicy::Mode::kSeeded) {
    return SolveBlossom(costs, {}, 1);
  }
  std::mt19937_64 rng(policy.seed());
  std::uniform_int_distribution<std::int64_t> dist(0, kNoiseRange - 1);
  std::vector<std::int64_t> noise(n * (n - 1) / 2);
  for (auto& x : noise) x = dist(rng);
  const std::int64_t multiplier =
      static_cast<std::int64_t>(n / 2) * kNoiseRange + 1;
  return SolveBlossom(costs, noise, multiplier);
}

// Sums Rational weights after clearing denominators.
CostMatrix ToCostMatrix(const CompleteWeightedGraph& graph, BigInt* scale,
                        Rational* offset) {
  const std::size_t n = graph.node_count();
  BigInt lcd = 1;
  Rational min_weight = graph.weight(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      lcd = boost::multiprecision::lcm(
          lcd, boost::multiprecision::denominator(graph.weight(i, j)));
      min_weight = std::min(min_weight, graph.weight(i, j));
    }
  }
  // Shifting every weight by a constant changes every perfect matching by
  // the same amount, so negative weights are handled by an offset.
  CostMatrix costs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational shifted = (graph.weight(i, j) - min_weight) * lcd;
      costs.set(i, j,
                ToInt64(boost::multiprecision::numerator(shifted),
                        "scaled edge weight"));
    }
  }
  *scale = lcd;
  *offset = min_weight;
  return costs;
}

Rational SumWeights(const CompleteWeightedGraph& graph,
                    std::span<const NodePair> pairs) {
  Rational total = 0;
  for (const NodePair& p : pairs) total += graph.weight(p.first, p.second);
  return total;
}

}  // namespace

std::vector<NodePair> Canonical(std::vector<NodePair> pairs) {
  for (auto& p : pairs) p = NodePair::Of(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

void RequirePerfect(std::span<const NodePair> pairs, std::size_t node_count) {
  if (pairs.size() * 2 != node_count) {
    throw InputError("matching has " + std::to_string(pairs.size()) +
                     " pairs, expected " + std::to_string(node_count / 2));
  }
  std::vector<char> seen(node_count, 0);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (std::size_t v : {pairs[k].first, pairs[k].second}) {
      if (v >= node_count) {
        throw InputError("pair " + std::to_string(k) + " references node " +
                         std::to_string(v) + " outside 0.." +
                         std::to_string(node_count - 1));
      }
      if (seen[v]) {
        throw InputError("node " + std::to_string(v) +
                         " is covered twice (pair " + std::to_string(k) + ")");
      }
      seen[v] = 1;
    }
  }
}

CompleteWeightedGraph::CompleteWeightedGraph(std::size_t node_count,
                                             const WeightFn& weight)
    : node_count_(node_count), weights_(node_count * node_count) {
  if (node_count < 2 || node_count % 2 != 0) {
    throw InputError("complete graph needs an even node count >= 2, got " +
                     std::to_string(node_count));
  }
  for (std::size_t i = 0; i < node_count; ++i) {
    for (std::size_t j = i + 1; j < node_count; ++j) {
      const Rational w = weight(i, j);
      weights_[i * node_count + j] = w;
      weights_[j * node_count + i] = w;
    }
  }
}

CompleteWeightedGraph CompleteWeightedGraph::JoinCost(
    std::span<const DenseVector> vectors) {
  CommonDimension(vectors);
  return CompleteWeightedGraph(vectors.size(),
                               [&](std::size_t i, std::size_t j) {
                                 return Weight(Join(vectors[i], vectors[j]));
                               });
}

TieBreakPolicy TieBreakPolicy::Seeded(std::uint64_t seed) {
  TieBreakPolicy p;
  p.mode_ = Mode::kSeeded;
  p.seed_ = seed;
  return p;
}

TieBreakPolicy TieBreakPolicy::Forced(std::vector<NodePair> matching) {
  TieBreakPolicy p;
  p.mode_ = Mode::kForced;
  p.forced_ = std::move(matching);
  return p;
}

CostMatrix CostMatrix::PairCosts(const ScaledVectors& vectors) {
  CostMatrix costs(vectors.count);
  for (std::size_t i = 0; i < vectors.count; ++i) {
    for (std::size_t j = i + 1; j < vectors.count; ++j) {
      costs.set(i, j, ScaledPairCost(vectors, i, j));
    }
  }
  return costs;
}

std::int64_t MatchingCost(const CostMatrix& costs,
                          std::span<const NodePair> pairs) {
  std::int64_t total = 0;
  for (const NodePair& p : pairs) total += costs(p.first, p.second);
  return total;
}

IntegerMatching MinCostPerfectMatching(const CostMatrix& costs,
                                       const TieBreakPolicy& policy) {
  RequireEven(costs.size());
  if (costs.size() == 0) return {};
  if (policy.mode() == TieBreakPolicy::Mode::kForced) {
    std::vector<NodePair> forced = Canonical(policy.forced());
    RequirePerfect(forced, costs.size());
    const std::int64_t optimum = MatchingCost(
        costs, EngineMatching(costs, TieBreakPolicy::Lexicographic()));
    const std::int64_t cost = MatchingCost(costs, forced);
    if (cost != optimum) {
      throw OptimalityError("forced matching costs " + std::to_string(cost) +
                            " but the optimum is " + std::to_string(optimum));
    }
    return {std::move(forced), cost};
  }
  std::vector<NodePair> pairs = EngineMatching(costs, policy);
  const std::int64_t cost = MatchingCost(costs, pairs);
  return {std::move(pairs), cost};
}

PerfectMatching MinCostPerfectMatching(const CompleteWeightedGraph& graph,
                                       const TieBreakPolicy& policy) {
  BigInt scale;
  Rational offset;
  const CostMatrix costs = ToCostMatrix(graph, &scale, &offset);
  // The forced check runs on the scaled matrix; errors surface from there.
  IntegerMatching m = MinCostPerfectMatching(costs, policy);
  PerfectMatching out;
  out.total_cost = SumWeights(graph, m.pairs);
  out.pairs = std::move(m.pairs);
  return out;
}

SavingsMatching MaxSavingsPerfectMatching(std::span<const DenseVector> vectors,
                                          const TieBreakPolicy& policy) {
  RequireEven(vectors.size());
  if (vectors.empty()) throw InputError("no vectors to match");
  const std::size_t n = vectors.size();
  const CompleteWeightedGraph neg_savings(n, [&](std::size_t i, std::size_t j) {
    return Rational(-Savings(vectors[i], vectors[j]));
  });
  const PerfectMatching m = MinCostPerfectMatching(neg_savings, policy);
  SavingsMatching out;
  out.total_savings = -m.total_cost;
  out.matching.pairs = m.pairs;
  for (const NodePair& p : m.pairs) {
    out.matching.total_cost +=
        Weight(Join(vectors[p.first], vectors[p.second]));
  }
  return out;
}

PerfectMatching BruteForceMatching(const CompleteWeightedGraph& graph,
                                   std::size_t node_limit) {
  const std::size_t n = graph.node_count();
  if (n > node_limit) {
    throw SizeError("brute-force matching limited to " +
                    std::to_string(node_limit) + " nodes, got " +
                    std::to_string(n));
  }
  std::vector<char> used(n, 0);
  std::vector<NodePair> current;
  std::vector<NodePair> best;
  Rational best_cost;
  bool have_best = false;
  Rational running = 0;
  // Pairs the lowest free node with each candidate in ascending order, so
  // complete matchings are produced in lexicographic order; keeping only
  // strict improvements yields the lexicographically smallest optimum.
  auto recurse = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      if (!have_best || running < best_cost) {
        best = current;
        best_cost = running;
        have_best = true;
      }
      return;
    }
    used[i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current.push_back({i, j});
      running += graph.weight(i, j);
      self(self);
      running -= graph.weight(i, j);
      current.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  recurse(recurse);
  return {std::move(best), best_cost};
}

bool VerifyOptimal(const CompleteWeightedGraph& graph,
                   const PerfectMatching& matching, OptimalityOracle oracle) {
  RequirePerfect(matching.pairs, graph.node_count());
  const Rational actual = SumWeights(graph, matching.pairs);
  if (actual != matching.total_cost) {
    throw InputError("matching reports cost " +
                     FormatRational(matching.total_cost) +
                     " but its pairs sum to " + FormatRational(actual));
  }
  const Rational optimum = oracle == OptimalityOracle::kBruteForce
                               ? BruteForceMatching(graph).total_cost
                               : MinCostPerfectMatching(graph).total_cost;
  return actual == optimum;
}

}  // namespace quadpart
