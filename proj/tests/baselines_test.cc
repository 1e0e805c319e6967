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

#include "quadpart/baselines.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "quadpart/errors.h"
#include "quadpart/instance.h"

namespace quadpart {
namespace {

TEST(ExactOptTest, BadInstances) {
  EXPECT_EQ(ExactOpt(BuiltinInstance("pq_lb8").vectors()).opt_cost, 4);
  EXPECT_EQ(ExactOpt(BuiltinInstance("pq2_lb8").vectors()).opt_cost, 6);
  EXPECT_EQ(ExactOpt(BuiltinInstance("pq2dc_lb8").vectors()).opt_cost, 8);
  EXPECT_EQ(ExactOpt(BuiltinInstance("greedy_pq12").vectors()).opt_cost, 3);
  EXPECT_EQ(ExactOpt(BuiltinInstance("greedy_pq2dc8").vectors()).opt_cost, 10);
}

TEST(ExactOptTest, WitnessIsConsistent) {
  const auto v = BuiltinInstance("greedy_pq12").vectors();
  const ExactResult r = ExactOpt(v);
  RequireExactCover(r.partition.quads, v.size());
  EXPECT_EQ(PartitionCost(v, r.partition.quads), r.opt_cost);
  EXPECT_EQ(r.partition.total_cost, r.opt_cost);
}

TEST(ExactOptTest, Limits) {
  const Instance big = Generate(InstanceClass::kGeneral, 6, 3, 1);
  EXPECT_THROW(ExactOpt(big.vectors()), SizeError);
  const Instance mid = Generate(InstanceClass::kGeneral, 4, 6, 2);
  EXPECT_THROW(ExactOpt(mid.vectors(), {.max_k = 5, .node_budget = 0}),
               SizeError);
  EXPECT_THROW(ExactOpt(std::vector<DenseVector>(6, DenseVector({1}))),
               InputError);
}

TEST(ExactOptTest, AgreesWithEnumeration) {
  for (InstanceClass cls : kAllClasses) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const std::size_t k = 1 + seed % 3;
      const auto [lo, hi] = FeasibleSizes(cls, k);
      const Instance inst =
          Generate(cls, k, std::min(hi, lo + seed % 3), seed + 100);
      const auto& v = inst.vectors();
      const ExactResult exact = ExactOpt(v);
      const EnumerationResult all = EnumerateAllPartitions(v);
      EXPECT_EQ(exact.opt_cost, all.best.total_cost);
      if (k <= 2) {
        EXPECT_EQ(exact.opt_cost, oracle::MinPartitionCost(v));
      }
    }
  }
}

TEST(ExactOptTest, RationalInstances) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<DenseVector> v;
    for (int i = 0; i < 8; ++i) v.push_back(oracle::RandomVector(rng, 2, 5, 3));
    EXPECT_EQ(ExactOpt(v).opt_cost, oracle::MinPartitionCost(v));
  }
}

TEST(EnumerateAllPartitionsTest, CanonicalCounts) {
  // (4k)! / (k! (4!)^k): 1, 35, 5775.
  const std::vector<DenseVector> one(4, DenseVector({1}));
  EXPECT_EQ(EnumerateAllPartitions(one).partitions_visited, 1u);
  const auto eight = BuiltinInstance("pq_lb8").vectors();
  EXPECT_EQ(EnumerateAllPartitions(eight).partitions_visited, 35u);
  const auto twelve = BuiltinInstance("greedy_pq12").vectors();
  const EnumerationResult r = EnumerateAllPartitions(twelve);
  EXPECT_EQ(r.partitions_visited, 5775u);
  EXPECT_EQ(r.best.total_cost, 3);
}

TEST(EnumerateAllPartitionsTest, SizeCap) {
  const std::vector<DenseVector> v(20, DenseVector({1}));
  EXPECT_THROW(EnumerateAllPartitions(v), SizeError);
}

TEST(GreedyTest, ScriptedTiesOnUnitVectors) {
  const auto v = BuiltinInstance("greedy_pq12").vectors();
  GreedyOptions options;
  options.scripted_choices = {{0, 1, 2, 3}, {6, 7, 10, 11}};
  const QuadPartition p = Greedy(v, options);
  RequireExactCover(p.quads, v.size());
  EXPECT_EQ(p.total_cost, 6);
  EXPECT_EQ(p.total_cost, PartitionCost(v, p.quads));
}

TEST(GreedyTest, ScriptedTiesOnConnectedGraph) {
  const auto v = BuiltinInstance("greedy_pq2dc8").vectors();
  GreedyOptions options;
  options.scripted_choices = {{1, 2, 5, 6}};
  const QuadPartition p = Greedy(v, options);
  EXPECT_EQ(p.total_cost, 13);
  EXPECT_EQ(QuadCost(v[1], v[2], v[5], v[6]), 5);
}

TEST(GreedyTest, ScriptValidation) {
  const auto v = BuiltinInstance("greedy_pq12").vectors();
  GreedyOptions bad_cost;
  bad_cost.scripted_choices = {{3, 4, 6, 9}};  // cost 3, minimum is 1
  EXPECT_THROW(Greedy(v, bad_cost), OptimalityError);
  GreedyOptions out_of_range;
  out_of_range.scripted_choices = {{0, 1, 2, 12}};
  EXPECT_THROW(Greedy(v, out_of_range), InputError);
  GreedyOptions reused;
  reused.scripted_choices = {{0, 1, 2, 3}, {0, 4, 5, 6}};
  EXPECT_THROW(Greedy(v, reused), InputError);
  GreedyOptions repeated;
  repeated.scripted_choices = {{0, 0, 1, 2}};
  EXPECT_THROW(Greedy(v, repeated), InputError);
}

TEST(GreedyTest, FourVectors) {
  const std::vector<DenseVector> v = {DenseVector({1, 0}), DenseVector({2, 1}),
                                      DenseVector({0, 3}), DenseVector({1, 1})};
  EXPECT_EQ(Greedy(v).total_cost, ExactOpt(v).opt_cost);
}

TEST(GreedyTest, PermutationInvariant) {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = Generate(InstanceClass::kTwoOnes, 3, 5, seed);
    std::vector<DenseVector> v = inst.vectors();
    const Rational cost = Greedy(v).total_cost;
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::shuffle(v.begin(), v.end(), rng);
      EXPECT_EQ(Greedy(v).total_cost, cost);
    }
  }
}

TEST(BaselinesPropertyTest, ExactIsBelowHeuristics) {
  for (InstanceClass cls : kAllClasses) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const std::size_t k = 2 + seed % 3;
      const Instance inst =
          Generate(cls, k, FeasibleSizes(cls, k).first + 1, seed);
      const Rational opt = ExactOpt(inst.vectors()).opt_cost;
      EXPECT_LE(opt, Greedy(inst.vectors()).total_cost);
      EXPECT_LE(opt, RunAlgorithmA(inst.vectors()).partition.total_cost);
    }
  }
}

}  // namespace
}  // namespace quadpart
