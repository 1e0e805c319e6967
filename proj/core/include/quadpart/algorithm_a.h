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

#ifndef QUADPART_ALGORITHM_A_H_
#define QUADPART_ALGORITHM_A_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "quadpart/matching.h"
#include "quadpart/rational.h"
#include "quadpart/vector.h"

namespace quadpart {

// Four vector indices, ascending.
using Quad = std::array<std::size_t, 4>;

struct QuadPartition {
  std::vector<Quad> quads;  // sorted
  Rational total_cost = 0;
};

// Recomputes sum of quad costs; does not check the cover.
Rational PartitionCost(std::span<const DenseVector> vectors,
                       std::span<const Quad> quads);

// Throws InputError unless `quads` is an exact cover of 0..count-1.
void RequireExactCover(std::span<const Quad> quads, std::size_t count);

struct IdenticalPrepass {
  std::vector<NodePair> forced_pairs;  // equal vectors, sorted
  std::vector<std::size_t> remainder;  // unpaired indices, ascending
};

// Pairs equal vectors greedily: within each group of equal vectors,
// consecutive indices are paired and at most one stays unpaired.
IdenticalPrepass IdenticalPairs(std::span<const DenseVector> vectors);

struct PhaseOnePairing {
  std::vector<NodePair> pairs;      // over input indices
  std::vector<DenseVector> merged;  // merged[i] = join of pairs[i]
  Rational cost_m = 0;              // sum of Weight(merged[i])
};

// Accounting that links a run to its matchings: the result equals the
// phase-one cost minus the savings of the phase-two matching.
struct RunTrace {
  Rational cost_m = 0;
  Rational weight_m_prime = 0;
  Rational result_cost = 0;

  bool IdentityHolds() const {
    return result_cost == cost_m - weight_m_prime && result_cost <= cost_m;
  }
};

struct RunPolicy {
  TieBreakPolicy phase_one = TieBreakPolicy::Lexicographic();
  TieBreakPolicy phase_two = TieBreakPolicy::Lexicographic();

  static RunPolicy Lexicographic() { return {}; }
  // Independent seeded tie-breaking in both phases.
  static RunPolicy Seeded(std::uint64_t seed);
};

struct AlgorithmAResult {
  QuadPartition partition;
  RunTrace trace;
};

// Minimum-cost perfect matching of the vectors under join cost. Identical
// pairs are fixed first, the rest goes to the matching engine. A forced
// policy bypasses the prepass and is verified against the full optimum.
// Requires a count divisible by 4.
PhaseOnePairing PhaseOne(
    std::span<const DenseVector> vectors,
    const TieBreakPolicy& policy = TieBreakPolicy::Lexicographic());

// Matches the merged pairs into quads. A forced policy indexes into
// `pairing.pairs`.
AlgorithmAResult PhaseTwo(
    std::span<const DenseVector> vectors, const PhaseOnePairing& pairing,
    const TieBreakPolicy& policy = TieBreakPolicy::Lexicographic());

AlgorithmAResult RunAlgorithmA(std::span<const DenseVector> vectors,
                               const RunPolicy& policy = RunPolicy{});

struct GroupPartition {
  std::size_t group_size = 0;
  std::vector<std::vector<std::size_t>> groups;  // each sorted; list sorted
  Rational total_cost = 0;
};

struct MultiRoundTrace {
  std::vector<Rational> round_cost;     // cost after each round
  std::vector<Rational> round_savings;  // savings of rounds 2..s
  Rational result_cost = 0;
};

struct MultiRoundResult {
  GroupPartition partition;
  MultiRoundTrace trace;
};

// Groups of 2^rounds vectors by repeated merge-and-match. `policies[r]`
// applies to round r; missing entries are lexicographic. rounds == 2 is
// algorithm A.
MultiRoundResult RunMultiRound(std::span<const DenseVector> vectors, int rounds,
                               std::span<const TieBreakPolicy> policies = {});

}  // namespace quadpart

#endif  // QUADPART_ALGORITHM_A_H_
