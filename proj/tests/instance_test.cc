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

#include "quadpart/instance.h"

#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "quadpart/baselines.h"
#include "quadpart/errors.h"

namespace quadpart {
namespace {

GraphView Graph(std::size_t nodes,
                std::vector<std::pair<std::size_t, std::size_t>> edges) {
  GraphView g{nodes, {}};
  for (auto [u, v] : edges) g.edges.push_back({u, v});
  return g;
}

// Number of nodes touched by the listed edges.
std::size_t TouchedNodes(const GraphView& g,
                         std::initializer_list<std::size_t> idx) {
  std::set<std::size_t> nodes;
  for (std::size_t i : idx) {
    nodes.insert(g.edges[i].u);
    nodes.insert(g.edges[i].v);
  }
  return nodes.size();
}

TEST(InstanceTest, Validation) {
  EXPECT_THROW(Instance({}), InputError);
  EXPECT_THROW(Instance(std::vector<DenseVector>(6, DenseVector({1}))),
               InputError);
  std::vector<DenseVector> ragged(4, DenseVector({1, 0}));
  ragged[2] = DenseVector({1});
  EXPECT_THROW(Instance{ragged}, InputError);
  const Instance ok(std::vector<DenseVector>(8, DenseVector({1, 0, 2})), "x");
  EXPECT_EQ(ok.k(), 2u);
  EXPECT_EQ(ok.dim(), 3u);
  EXPECT_EQ(ok.name(), "x");
}

TEST(ClassifyTest, BadInstances) {
  EXPECT_EQ(Classify(BuiltinInstance("pq_lb8")), InstanceClass::kOneOrTwoOnes);
  EXPECT_EQ(Classify(BuiltinInstance("pq2_lb8")), InstanceClass::kTwoOnes);
  EXPECT_EQ(Classify(BuiltinInstance("pq2dc_lb8")),
            InstanceClass::kTwoOnesDistinctConnected);
  EXPECT_EQ(Classify(BuiltinInstance("greedy_pq2dc8")),
            InstanceClass::kTwoOnesDistinctConnected);
  EXPECT_EQ(Classify(BuiltinInstance("pq_allzero8")), InstanceClass::kGeneral);
  EXPECT_EQ(Classify(BuiltinInstance("greedy_pq12")), InstanceClass::kGeneral);
}

TEST(ClassifyTest, Hierarchy) {
  std::vector<DenseVector> frac(4, DenseVector({1, 1}));
  frac[0] = DenseVector(std::vector<Rational>{Rational(1, 2), Rational(1)});
  EXPECT_EQ(Classify(Instance(frac)), InstanceClass::kGeneral);
  std::vector<DenseVector> three(4, DenseVector({1, 1, 0}));
  three[3] = DenseVector({1, 1, 1});
  EXPECT_EQ(Classify(Instance(three)), InstanceClass::kGeneral);
  const GraphView two_components = Graph(
      8, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {1, 4}});
  EXPECT_EQ(Classify(FromGraph(two_components)),
            InstanceClass::kTwoOnesDistinct);
}

TEST(ClassifyTest, IsolatedLabelsDoNotBreakConnectivity) {
  const GraphView g = Graph(9, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  EXPECT_TRUE(IsConnected(g));
  EXPECT_EQ(Classify(FromGraph(g)), InstanceClass::kTwoOnesDistinctConnected);
}

TEST(ClassifyTest, DuplicateDemotesDistinct) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = Generate(
        InstanceClass::kTwoOnesDistinct, 2,
        FeasibleSizes(InstanceClass::kTwoOnesDistinct, 2).first + seed % 4,
        seed);
    ASSERT_EQ(Classify(inst), InstanceClass::kTwoOnesDistinct);
    std::vector<DenseVector> v = inst.vectors();
    // Replace the last four vectors by copies of the first: still four to a
    // quad, now with duplicates.
    for (std::size_t i = v.size() - 1; i + 4 >= v.size(); --i) v[i] = v[0];
    const InstanceClass demoted = Classify(Instance(v));
    EXPECT_EQ(demoted, InstanceClass::kTwoOnes);
  }
}

TEST(GraphViewTest, MultigraphRoundTrip) {
  const Instance inst = BuiltinInstance("pq2_lb8");
  const GraphView g = ToGraph(inst);
  EXPECT_EQ(
      g,
      Graph(5,
            {{1, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 5}}));
  EXPECT_EQ(FromGraph(g).vectors(), inst.vectors());
  EXPECT_EQ(inst.vectors()[2], DenseVector({1, 0, 1, 0, 0}));
}

TEST(GraphViewTest, RepeatedEdge) {
  const Instance inst = FromGraph(Graph(3, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  EXPECT_EQ(inst.vectors(),
            std::vector<DenseVector>(4, DenseVector({1, 1, 0})));
  EXPECT_TRUE(IsConnected(ToGraph(inst)));
  EXPECT_FALSE(IsSimple(ToGraph(inst)));
}

TEST(GraphViewTest, Errors) {
  EXPECT_THROW(ToGraph(BuiltinInstance("pq_lb8")), InputError);
  EXPECT_THROW(FromGraph(Graph(3, {{1, 1}, {1, 2}, {2, 3}, {1, 3}})),
               InputError);
  EXPECT_THROW(FromGraph(Graph(3, {{1, 4}, {1, 2}, {2, 3}, {1, 3}})),
               InputError);
  EXPECT_THROW(FromGraph(Graph(3, {{1, 2}, {2, 3}, {1, 3}})), InputError);
}

TEST(GraphViewTest, QuadCostsAgreeBothWays) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst =
        Generate(InstanceClass::kTwoOnes, 2, 3 + seed % 5, seed);
    const GraphView g = ToGraph(inst);
    const Instance back = FromGraph(g);
    ASSERT_EQ(back.vectors(), inst.vectors());
    const auto& v = inst.vectors();
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = a + 1; b < 8; ++b) {
        for (std::size_t c = b + 1; c < 8; ++c) {
          for (std::size_t d = c + 1; d < 8; ++d) {
            EXPECT_EQ(QuadCost(v[a], v[b], v[c], v[d]),
                      TouchedNodes(g, {a, b, c, d}));
          }
        }
      }
    }
  }
}

TEST(GraphPredicatesTest, Bipartite) {
  EXPECT_TRUE(IsBipartite(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  EXPECT_FALSE(IsBipartite(Graph(3, {{1, 2}, {2, 3}, {3, 1}})));
  EXPECT_FALSE(IsConnected(Graph(4, {{1, 2}, {3, 4}})));
}

TEST(BuiltinInstanceTest, Contents) {
  const Instance lb8 = BuiltinInstance("pq_lb8");
  ASSERT_EQ(lb8.size(), 8u);
  EXPECT_EQ(lb8.vectors()[0], DenseVector({1, 0, 0, 0}));
  EXPECT_EQ(lb8.vectors()[4], DenseVector({1, 1, 0, 0}));
  EXPECT_EQ(lb8.vectors()[5], DenseVector({1, 1, 0, 0}));
  EXPECT_EQ(lb8.vectors()[7], DenseVector({0, 0, 1, 1}));
  EXPECT_EQ(
      ToGraph(BuiltinInstance("pq2dc_lb8")),
      Graph(7,
            {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}}));
  EXPECT_EQ(
      ToGraph(BuiltinInstance("greedy_pq2dc8")),
      Graph(9,
            {{1, 2}, {2, 5}, {3, 5}, {3, 4}, {6, 7}, {5, 7}, {5, 8}, {8, 9}}));
  const Instance g12 = BuiltinInstance("greedy_pq12");
  EXPECT_EQ(g12.size(), 12u);
  EXPECT_EQ(g12.vectors()[0], DenseVector::Zero(3));
  EXPECT_EQ(g12.vectors()[11], DenseVector({0, 0, 1}));
  EXPECT_EQ(BuiltinInstance("pq_allzero8").dim(), 2u);
  for (std::string_view name : BuiltinInstanceNames()) {
    EXPECT_EQ(BuiltinInstance(name).name(), name);
  }
  EXPECT_THROW(BuiltinInstance("nope"), InputError);
}

TEST(GenerateTest, Examples) {
  EXPECT_EQ(
      Classify(Generate(InstanceClass::kTwoOnesDistinctConnected, 2, 7, 1)),
      InstanceClass::kTwoOnesDistinctConnected);
  const Instance g = Generate(InstanceClass::kGeneral, 1, 5, 7);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.dim(), 5u);
  EXPECT_EQ(Generate(InstanceClass::kTwoOnes, 3, 6, 42),
            Generate(InstanceClass::kTwoOnes, 3, 6, 42));
  EXPECT_NE(Generate(InstanceClass::kTwoOnes, 3, 6, 42).vectors(),
            Generate(InstanceClass::kTwoOnes, 3, 6, 43).vectors());
}

TEST(GenerateTest, InfeasibleParameters) {
  EXPECT_THROW(Generate(InstanceClass::kTwoOnesDistinctConnected, 2, 20, 1),
               InputError);
  EXPECT_THROW(Generate(InstanceClass::kTwoOnesDistinctConnected, 2, 4, 1),
               InputError);
  EXPECT_THROW(Generate(InstanceClass::kGeneral, 0, 3, 1), InputError);
  EXPECT_THROW(Generate(InstanceClass::kOneOrTwoOnes, 1, 1, 1), InputError);
}

TEST(GenerateTest, EveryClassAndSizeReclassifies) {
  for (InstanceClass cls : kAllClasses) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto [lo, hi] = FeasibleSizes(cls, k);
      for (std::size_t size = lo; size <= std::min(hi, lo + 8); ++size) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const Instance inst = Generate(cls, k, size, seed);
          EXPECT_EQ(Classify(inst), cls)
              << ClassName(cls) << " k=" << k << " size=" << size;
          EXPECT_EQ(inst.k(), k);
          if (cls != InstanceClass::kGeneral) {
            for (const DenseVector& v : inst.vectors()) {
              EXPECT_NE(v, DenseVector::Zero(v.dim()));
            }
          }
        }
      }
    }
  }
}

TEST(ClassNameTest, RoundTrip) {
  for (InstanceClass cls : kAllClasses) {
    EXPECT_EQ(ParseClass(ClassName(cls)), cls);
  }
  EXPECT_THROW(ParseClass("Tree"), InputError);
}

TEST(Epc4ReduceTest, SingleCycle) {
  const Instance inst = Epc4Reduce(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  EXPECT_EQ(Classify(inst), InstanceClass::kTwoOnesDistinctConnected);
  EXPECT_EQ(ExactOpt(inst.vectors()).opt_cost, 4);
}

TEST(Epc4ReduceTest, Rejections) {
  // K_{2,3}: six edges.
  EXPECT_THROW(
      Epc4Reduce(Graph(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})),
      InputError);
  EXPECT_THROW(Epc4Reduce(Graph(3, {{1, 2}, {2, 3}, {3, 1}, {1, 2}})),
               InputError);
  EXPECT_THROW(Epc4Reduce(Graph(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}})),
               InputError);
  EXPECT_THROW(
      Epc4Reduce(Graph(
          8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}})),
      InputError);
}

TEST(Epc4ReduceTest, TwoCyclesSharingANode) {
  // Cycles 1-2-3-4 and 3-5-6-7 on the bipartition {1,3,6}, {2,4,5,7}.
  const GraphView g = Graph(
      7, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {5, 6}, {6, 7}, {7, 3}});
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const GraphEdge& e : g.edges) edges.push_back({e.u, e.v});
  ASSERT_TRUE(oracle::HasC4Decomposition(edges));
  EXPECT_EQ(ExactOpt(Epc4Reduce(g).vectors()).opt_cost, 8);
}

TEST(Epc4ReduceTest, PathIsNotDecomposable) {
  const GraphView g = Graph(
      9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  const Instance inst = Epc4Reduce(g);
  EXPECT_GT(ExactOpt(inst.vectors()).opt_cost, 8);
}

}  // namespace
}  // namespace quadpart
