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

#ifndef QUADPART_BASELINES_H_
#define QUADPART_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quadpart/algorithm_a.h"
#include "quadpart/rational.h"
#include "quadpart/vector.h"

namespace quadpart {

struct SearchLimits {
  std::size_t max_k = 5;
  std::uint64_t node_budget = 200'000'000;
};

struct ExactResult {
  QuadPartition partition;
  Rational opt_cost = 0;
  std::uint64_t nodes_explored = 0;
};

// Branch and bound over canonical partitions: the lowest unassigned index
// anchors each new quad. A node is pruned when its accumulated cost plus a
// lower bound on the rest reaches the incumbent. The bound is the larger of
//  - half the minimum perfect-matching cost of the remaining vectors (a quad
//    costs at least half the sum of its two pair costs), and
//  - w[0] + w[4] + w[8] + ... over the remaining weights sorted descending
//    (the i-th most expensive quad contains a vector at least that heavy).
// Throws SizeError when k exceeds limits.max_k or the node budget runs out;
// it never returns an unproven answer.
ExactResult ExactOpt(std::span<const DenseVector> vectors,
                     const SearchLimits& limits = {});

struct EnumerationResult {
  QuadPartition best;
  std::uint64_t partitions_visited = 0;
};

inline constexpr std::size_t kEnumerationMaxK = 4;

// Visits every canonical partition into quads without pruning. Test oracle
// for ExactOpt; k is capped at `max_k`.
EnumerationResult EnumerateAllPartitions(std::span<const DenseVector> vectors,
                                         std::size_t max_k = kEnumerationMaxK);

struct GreedyOptions {
  // Adversarial ties: quads to pick first, in order. Each one is checked to
  // be a cheapest quad among the remaining vectors (OptimalityError
  // otherwise). After the script the default rule resumes.
  std::vector<Quad> scripted_choices;
};

// Repeatedly removes a cheapest quad. By default ties go to the
// lexicographically smallest 4-tuple of positions in the canonical order
// (vectors sorted by value, then index), which makes the total cost
// independent of input order.
QuadPartition Greedy(std::span<const DenseVector> vectors,
                     const GreedyOptions& options = {});

}  // namespace quadpart

#endif  // QUADPART_BASELINES_H_
