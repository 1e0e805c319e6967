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

#include "quadpart/algorithm_a.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "quadpart/errors.h"

namespace quadpart {
namespace {

struct RowLess {
  bool operator()(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

IdenticalPrepass IdenticalRows(const ScaledVectors& items) {
  std::map<std::span<const std::int64_t>, std::vector<std::size_t>, RowLess>
      groups;
  for (std::size_t i = 0; i < items.count; ++i) {
    groups[items.row(i)].push_back(i);
  }
  IdenticalPrepass out;
  for (const auto& [row, members] : groups) {
    for (std::size_t m = 0; m + 1 < members.size(); m += 2) {
      out.forced_pairs.push_back({members[m], members[m + 1]});
    }
    if (members.size() % 2 == 1) out.remainder.push_back(members.back());
  }
  std::sort(out.forced_pairs.begin(), out.forced_pairs.end());
  std::sort(out.remainder.begin(), out.remainder.end());
  return out;
}

// One merge-and-match round on the current items: identical pairs first,
// then an optimal matching of the rest.
std::vector<NodePair> MatchRound(const ScaledVectors& items,
                                 const TieBreakPolicy& policy) {
  if (policy.mode() == TieBreakPolicy::Mode::kForced) {
    return MinCostPerfectMatching(CostMatrix::PairCosts(items), policy).pairs;
  }
  IdenticalPrepass prepass = IdenticalRows(items);
  std::vector<NodePair> pairs = std::move(prepass.forced_pairs);
  const std::vector<std::size_t>& rest = prepass.remainder;
  if (!rest.empty()) {
    CostMatrix sub(rest.size());
    for (std::size_t a = 0; a < rest.size(); ++a) {
      for (std::size_t b = a + 1; b < rest.size(); ++b) {
        sub.set(a, b, ScaledPairCost(items, rest[a], rest[b]));
      }
    }
    for (const NodePair& p : MinCostPerfectMatching(sub, policy).pairs) {
      pairs.push_back(NodePair::Of(rest[p.first], rest[p.second]));
    }
  }
  return Canonical(std::move(pairs));
}

void RequireMultipleOf(std::size_t count, std::size_t group) {
  if (count == 0 || count % group != 0) {
    throw InputError("need a positive multiple of " + std::to_string(group) +
                     " vectors, got " + std::to_string(count));
  }
}

}  // namespace

Rational PartitionCost(std::span<const DenseVector> vectors,
                       std::span<const Quad> quads) {
  Rational total = 0;
  for (const Quad& q : quads) {
    total +=
        QuadCost(vectors[q[0]], vectors[q[1]], vectors[q[2]], vectors[q[3]]);
  }
  return total;
}

void RequireExactCover(std::span<const Quad> quads, std::size_t count) {
  std::vector<char> seen(count, 0);
  for (std::size_t g = 0; g < quads.size(); ++g) {
    for (std::size_t i : quads[g]) {
      if (i >= count) {
        throw InputError("quad " + std::to_string(g) + " has index " +
                         std::to_string(i) + " out of range");
      }
      if (seen[i]) {
        throw InputError("index " + std::to_string(i) +
                         " appears twice (quad " + std::to_string(g) + ")");
      }
      seen[i] = 1;
    }
  }
  if (quads.size() * 4 != count) {
    throw InputError("quads do not cover all " + std::to_string(count) +
                     " vectors");
  }
}

IdenticalPrepass IdenticalPairs(std::span<const DenseVector> vectors) {
  if (vectors.empty()) return {};
  return IdenticalRows(Scale(vectors));
}

RunPolicy RunPolicy::Seeded(std::uint64_t seed) {
  RunPolicy p;
  p.phase_one = TieBreakPolicy::Seeded(seed);
  p.phase_two = TieBreakPolicy::Seeded(seed ^ 0x9e3779b97f4a7c15ULL);
  return p;
}

PhaseOnePairing PhaseOne(std::span<const DenseVector> vectors,
                         const TieBreakPolicy& policy) {
  RequireMultipleOf(vectors.size(), 4);
  const ScaledVectors scaled = Scale(vectors);
  PhaseOnePairing out;
  out.pairs = MatchRound(scaled, policy);
  out.merged.reserve(out.pairs.size());
  for (const NodePair& p : out.pairs) {
    out.merged.push_back(Join(vectors[p.first], vectors[p.second]));
    out.cost_m += Weight(out.merged.back());
  }
  return out;
}

AlgorithmAResult PhaseTwo(std::span<const DenseVector> vectors,
                          const PhaseOnePairing& pairing,
                          const TieBreakPolicy& policy) {
  RequireMultipleOf(vectors.size(), 4);
  RequirePerfect(pairing.pairs, vectors.size());
  if (pairing.merged.size() != pairing.pairs.size()) {
    throw InputError("pairing has " + std::to_string(pairing.merged.size()) +
                     " merged vectors for " +
                     std::to_string(pairing.pairs.size()) + " pairs");
  }
  const ScaledVectors scaled = Scale(pairing.merged);
  const std::vector<NodePair> matched = MatchRound(scaled, policy);

  AlgorithmAResult out;
  out.trace.cost_m = pairing.cost_m;
  for (const NodePair& m : matched) {
    const NodePair& a = pairing.pairs[m.first];
    const NodePair& b = pairing.pairs[m.second];
    Quad q = {a.first, a.second, b.first, b.second};
    std::sort(q.begin(), q.end());
    out.partition.quads.push_back(q);
    out.trace.weight_m_prime +=
        Savings(pairing.merged[m.first], pairing.merged[m.second]);
  }
  std::sort(out.partition.quads.begin(), out.partition.quads.end());
  out.partition.total_cost = PartitionCost(vectors, out.partition.quads);
  out.trace.result_cost = out.partition.total_cost;
  return out;
}

AlgorithmAResult RunAlgorithmA(std::span<const DenseVector> vectors,
                               const RunPolicy& policy) {
  return PhaseTwo(vectors, PhaseOne(vectors, policy.phase_one),
                  policy.phase_two);
}

MultiRoundResult RunMultiRound(std::span<const DenseVector> vectors, int rounds,
                               std::span<const TieBreakPolicy> policies) {
  if (rounds < 1 || rounds > 20) {
    throw InputError("rounds must be in 1..20, got " + std::to_string(rounds));
  }
  const std::size_t group_size = std::size_t{1} << rounds;
  RequireMultipleOf(vectors.size(), group_size);
  CommonDimension(vectors);

  std::vector<DenseVector> items(vectors.begin(), vectors.end());
  std::vector<std::vector<std::size_t>> groups(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) groups[i] = {i};

  MultiRoundResult out;
  out.partition.group_size = group_size;
  for (int r = 0; r < rounds; ++r) {
    const TieBreakPolicy policy = static_cast<std::size_t>(r) < policies.size()
                                      ? policies[r]
                                      : TieBreakPolicy::Lexicographic();
    const std::vector<NodePair> matched = MatchRound(Scale(items), policy);
    std::vector<DenseVector> next_items;
    std::vector<std::vector<std::size_t>> next_groups;
    Rational savings = 0;
    Rational cost = 0;
    for (const NodePair& m : matched) {
      next_items.push_back(Join(items[m.first], items[m.second]));
      cost += Weight(next_items.back());
      savings += Savings(items[m.first], items[m.second]);
      std::vector<std::size_t> g = groups[m.first];
      g.insert(g.end(), groups[m.second].begin(), groups[m.second].end());
      std::sort(g.begin(), g.end());
      next_groups.push_back(std::move(g));
    }
    out.trace.round_cost.push_back(cost);
    if (r > 0) out.trace.round_savings.push_back(savings);
    items = std::move(next_items);
    groups = std::move(next_groups);
  }
  std::sort(groups.begin(), groups.end());
  for (const auto& g : groups) {
    std::vector<DenseVector> members;
    for (std::size_t i : g) members.push_back(vectors[i]);
    out.partition.total_cost += GroupCost(members);
  }
  out.partition.groups = std::move(groups);
  out.trace.result_cost = out.partition.total_cost;
  return out;
}

}  // namespace quadpart
