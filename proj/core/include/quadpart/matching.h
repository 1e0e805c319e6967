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

#ifndef QUADPART_MATCHING_H_
#define QUADPART_MATCHING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "quadpart/rational.h"
#include "quadpart/vector.h"

namespace quadpart {

// Unordered node pair, stored with first < second.
struct NodePair {
  std::size_t first = 0;
  std::size_t second = 0;

  static NodePair Of(std::size_t a, std::size_t b) {
    return a < b ? NodePair{a, b} : NodePair{b, a};
  }
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

// Sorts pairs by first node. Does not validate.
std::vector<NodePair> Canonical(std::vector<NodePair> pairs);

// Throws InputError unless `pairs` covers 0..node_count-1 exactly once.
void RequirePerfect(std::span<const NodePair> pairs, std::size_t node_count);

// Complete graph with an even number of nodes and an exact weight per
// unordered pair. Immutable once built.
class CompleteWeightedGraph {
 public:
  using WeightFn = std::function<Rational(std::size_t, std::size_t)>;

  // Throws InputError unless node_count is even and >= 2.
  CompleteWeightedGraph(std::size_t node_count, const WeightFn& weight);

  // Graph on vectors with weight(i, j) = |v_i v v_j|.
  static CompleteWeightedGraph JoinCost(std::span<const DenseVector> vectors);

  std::size_t node_count() const { return node_count_; }
  const Rational& weight(std::size_t i, std::size_t j) const {
    return weights_[i * node_count_ + j];
  }

 private:
  std::size_t node_count_;
  std::vector<Rational> weights_;
};

struct PerfectMatching {
  std::vector<NodePair> pairs;
  Rational total_cost = 0;
};

// How the engine resolves ties between optimal matchings.
//  - lexicographic: deterministic engine run, nothing else promised.
//  - seeded: weights are perturbed by seeded noise far below one cost unit,
//    so the result is still optimal but the choice among optima varies.
//  - forced: the supplied matching is returned after it is checked to be
//    perfect (InputError) and optimal (OptimalityError).
class TieBreakPolicy {
 public:
  enum class Mode { kLexicographic, kSeeded, kForced };

  static TieBreakPolicy Lexicographic() { return TieBreakPolicy(); }
  static TieBreakPolicy Seeded(std::uint64_t seed);
  static TieBreakPolicy Forced(std::vector<NodePair> matching);

  Mode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<NodePair>& forced() const { return forced_; }

 private:
  TieBreakPolicy() = default;

  Mode mode_ = Mode::kLexicographic;
  std::uint64_t seed_ = 0;
  std::vector<NodePair> forced_;
};

// Dense symmetric integer cost matrix; the engine's native input.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t n) : n_(n), costs_(n * n, 0) {}

  static CostMatrix PairCosts(const ScaledVectors& vectors);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return costs_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, std::int64_t c) {
    costs_[i * n_ + j] = c;
    costs_[j * n_ + i] = c;
  }

 private:
  std::size_t n_;
  std::vector<std::int64_t> costs_;
};

struct IntegerMatching {
  std::vector<NodePair> pairs;
  std::int64_t cost = 0;
};

std::int64_t MatchingCost(const CostMatrix& costs,
                          std::span<const NodePair> pairs);

// Minimum-cost perfect matching by the weighted blossom method, O(n^3).
// Requires an even size (0 is allowed and yields the empty matching).
IntegerMatching MinCostPerfectMatching(
    const CostMatrix& costs,
    const TieBreakPolicy& policy = TieBreakPolicy::Lexicographic());

PerfectMatching MinCostPerfectMatching(
    const CompleteWeightedGraph& graph,
    const TieBreakPolicy& policy = TieBreakPolicy::Lexicographic());

struct SavingsMatching {
  PerfectMatching matching;  // total_cost is the summed join cost
  Rational total_savings = 0;
};

// A perfect matching of the vectors maximizing total savings; it minimizes
// the total join cost as well.
SavingsMatching MaxSavingsPerfectMatching(
    std::span<const DenseVector> vectors,
    const TieBreakPolicy& policy = TieBreakPolicy::Lexicographic());

inline constexpr std::size_t kDefaultBruteForceLimit = 12;

// Exhaustive search over all (n-1)!! perfect matchings. Returns the
// lexicographically smallest optimal matching. Test oracle.
PerfectMatching BruteForceMatching(
    const CompleteWeightedGraph& graph,
    std::size_t node_limit = kDefaultBruteForceLimit);

enum class OptimalityOracle { kEngine, kBruteForce };

// True iff `matching` attains the optimal cost of `graph`. Throws InputError
// if it is not a perfect matching or its total_cost disagrees with its pairs.
bool VerifyOptimal(const CompleteWeightedGraph& graph,
                   const PerfectMatching& matching,
                   OptimalityOracle oracle = OptimalityOracle::kEngine);

}  // namespace quadpart

#endif  // QUADPART_MATCHING_H_
