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

#include "quadpart/vector.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "quadpart/errors.h"

namespace quadpart {
namespace {

DenseVector Edge(std::size_t dim, std::size_t u, std::size_t v) {
  std::vector<Rational> c(dim, 0);
  c[u - 1] = 1;
  c[v - 1] = 1;
  return DenseVector(std::move(c));
}

TEST(DenseVectorTest, RejectsEmptyAndNegative) {
  EXPECT_THROW(DenseVector(std::vector<Rational>{}), InputError);
  EXPECT_THROW(DenseVector({1, -1}), InputError);
  EXPECT_THROW(DenseVector(std::vector<Rational>{Rational(-1, 2)}), InputError);
}

TEST(DenseVectorTest, BinaryFlag) {
  EXPECT_TRUE(DenseVector({0, 1, 1}).IsBinary());
  EXPECT_FALSE(DenseVector({0, 2}).IsBinary());
  const std::vector<DenseVector> mixed = {DenseVector({1, 0}),
                                          DenseVector({Rational(1, 2), 0})};
  EXPECT_FALSE(IsBinary(mixed));
}

TEST(JoinTest, Examples) {
  EXPECT_EQ(Join(DenseVector({1, 1, 0, 0, 0}), DenseVector({1, 0, 1, 0, 0})),
            DenseVector({1, 1, 1, 0, 0}));
  const DenseVector v({3, 0, 2});
  EXPECT_EQ(Join(v, v), v);
  EXPECT_EQ(Join(DenseVector::Zero(3), v), v);
}

TEST(JoinTest, DimensionMismatch) {
  EXPECT_THROW(Join(DenseVector({1}), DenseVector({1, 0})), InputError);
  EXPECT_THROW(Savings(DenseVector({1}), DenseVector({1, 0})), InputError);
  EXPECT_THROW(QuadCost(DenseVector({1}), DenseVector({1}), DenseVector({1}),
                        DenseVector({1, 0})),
               InputError);
}

TEST(WeightTest, Examples) {
  EXPECT_EQ(Weight(DenseVector({1, 1, 0, 0})), 2);
  EXPECT_EQ(Weight(DenseVector::Zero(4)), 0);
  EXPECT_EQ(Weight(DenseVector({1, 1, 1, 0, 0})), 3);
  EXPECT_EQ(Weight(DenseVector(
                std::vector<Rational>{Rational(1, 2), Rational(1, 3)})),
            Rational(5, 6));
}

TEST(SavingsTest, Examples) {
  EXPECT_EQ(Savings(DenseVector({1, 1, 0, 0, 0}), DenseVector({1, 1, 0, 0, 0})),
            2);
  EXPECT_EQ(Savings(DenseVector({2, 1}), DenseVector::Zero(2)), 0);
  EXPECT_EQ(Savings(DenseVector({1, 0, 1, 0}), DenseVector({0, 1, 0, 1})), 0);
}

TEST(QuadCostTest, Examples) {
  const DenseVector e12 = Edge(4, 1, 2);
  EXPECT_EQ(QuadCost(e12, e12, e12, e12), 2);
  EXPECT_EQ(
      QuadCost(Edge(4, 1, 2), Edge(4, 1, 3), Edge(4, 2, 4), Edge(4, 3, 4)), 4);
  EXPECT_EQ(QuadCost(DenseVector({1, 0, 0, 0}), DenseVector({0, 1, 0, 0}),
                     DenseVector({0, 0, 1, 0}), DenseVector({0, 0, 0, 1})),
            4);
}

class VectorPropertyTest : public ::testing::Test {
 protected:
  DenseVector Random(std::size_t dim) {
    return oracle::RandomVector(rng_, dim, 9, 6);
  }
  std::mt19937_64 rng_{20261014};
};

TEST_F(VectorPropertyTest, SavingsIdentityOnRandomPairs) {
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = 1 + trial % 7;
    const DenseVector u = Random(dim);
    const DenseVector v = Random(dim);
    EXPECT_EQ(Weight(u) + Weight(v), Savings(u, v) + Weight(Join(u, v)));
  }
}

TEST_F(VectorPropertyTest, JoinLaws) {
  for (int trial = 0; trial < 500; ++trial) {
    const DenseVector a = Random(4), b = Random(4), c = Random(4);
    EXPECT_EQ(Join(a, b), Join(b, a));
    EXPECT_EQ(Join(Join(a, b), c), Join(a, Join(b, c)));
    EXPECT_EQ(Join(a, a), a);
    EXPECT_EQ(Savings(a, b), Savings(b, a));
  }
}

TEST_F(VectorPropertyTest, QuadCostSymmetricAndMonotone) {
  for (int trial = 0; trial < 200; ++trial) {
    std::array<DenseVector, 4> q = {Random(3), Random(3), Random(3), Random(3)};
    const Rational cost = QuadCost(q[0], q[1], q[2], q[3]);
    const std::vector<const DenseVector*> members = {&q[0], &q[1], &q[2],
                                                     &q[3]};
    EXPECT_EQ(cost, oracle::JoinWeight(members));
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
      EXPECT_EQ(QuadCost(q[perm[0]], q[perm[1]], q[perm[2]], q[perm[3]]), cost);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        EXPECT_GE(cost, Weight(Join(q[i], q[j])));
      }
    }
  }
}

TEST(ToBinaryTest, SingleComponent) {
  const std::vector<DenseVector> in = {DenseVector({2}), DenseVector({1})};
  const std::vector<DenseVector> out = ToBinary(in);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], DenseVector({1, 1}));
  EXPECT_EQ(out[1], DenseVector({1, 0}));
  EXPECT_EQ(Weight(Join(out[0], out[1])), Weight(Join(in[0], in[1])));
}

TEST(ToBinaryTest, BinaryInputIsUnchanged) {
  const std::vector<DenseVector> in = {
      DenseVector({1, 0, 1}), DenseVector({0, 1, 1}), DenseVector({1, 1, 0})};
  EXPECT_EQ(ToBinary(in), in);
}

TEST(ToBinaryTest, DropsAllZeroComponents) {
  const std::vector<DenseVector> in = {DenseVector({0, 1, 0}),
                                       DenseVector({0, 0, 0})};
  EXPECT_EQ(ToBinary(in),
            (std::vector<DenseVector>{DenseVector({1}), DenseVector({0})}));
  const std::vector<DenseVector> zeros = {DenseVector::Zero(3),
                                          DenseVector::Zero(3)};
  EXPECT_EQ(ToBinary(zeros),
            (std::vector<DenseVector>{DenseVector({0}), DenseVector({0})}));
}

TEST(ToBinaryTest, ScalesFractionsByCommonDenominator) {
  const std::vector<DenseVector> in = {
      DenseVector(std::vector<Rational>{Rational(1, 2)}),
      DenseVector(std::vector<Rational>{Rational(1, 3)})};
  const std::vector<DenseVector> out = ToBinary(in);
  EXPECT_EQ(out[0], DenseVector({1, 1, 1}));
  EXPECT_EQ(out[1], DenseVector({1, 1, 0}));
}

TEST(ToBinaryTest, ExpansionLimit) {
  const std::vector<DenseVector> in = {DenseVector({100}), DenseVector({1})};
  EXPECT_THROW(ToBinary(in, {.max_expanded_dim = 99}), SizeError);
  EXPECT_EQ(ToBinary(in, {.max_expanded_dim = 100})[0].dim(), 100u);
}

// Every quad and pair cost survives, scaled by the common denominator.
TEST(ToBinaryTest, PreservesAllSubsetCosts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<DenseVector> in;
    for (int i = 0; i < 8; ++i)
      in.push_back(oracle::RandomVector(rng, 3, 3, 2));
    const std::vector<DenseVector> out = ToBinary(in);
    EXPECT_TRUE(IsBinary(out));
    BigInt lcd = 1;
    for (const DenseVector& v : in) {
      for (const Rational& r : v.components()) {
        lcd = boost::multiprecision::lcm(lcd,
                                         boost::multiprecision::denominator(r));
      }
    }
    const Rational scale(lcd);
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = a + 1; b < 8; ++b) {
        EXPECT_EQ(oracle::JoinWeight(out, {a, b}),
                  scale * oracle::JoinWeight(in, {a, b}));
        for (std::size_t c = b + 1; c < 8; ++c) {
          for (std::size_t d = c + 1; d < 8; ++d) {
            EXPECT_EQ(oracle::JoinWeight(out, {a, b, c, d}),
                      scale * oracle::JoinWeight(in, {a, b, c, d}));
          }
        }
      }
    }
  }
}

TEST(ScaleTest, IntegerImage) {
  const std::vector<DenseVector> in = {
      DenseVector(std::vector<Rational>{Rational(1, 2), Rational(2)}),
      DenseVector(std::vector<Rational>{Rational(1, 3), Rational(0)})};
  const ScaledVectors s = Scale(in);
  EXPECT_EQ(s.scale, 6);
  EXPECT_EQ(s.values, (std::vector<std::int64_t>{3, 12, 2, 0}));
  EXPECT_EQ(s.Unscale(ScaledPairCost(s, 0, 1)), Weight(Join(in[0], in[1])));
  const std::size_t both[] = {0, 1};
  EXPECT_EQ(s.Unscale(ScaledGroupCost(s, both)), Weight(Join(in)));
}

TEST(ScaleTest, RejectsHugeMagnitudes) {
  BigInt big = 1;
  big <<= 40;
  const std::vector<DenseVector> in = {
      DenseVector(std::vector<Rational>{Rational(big)})};
  EXPECT_THROW(Scale(in), SizeError);
}

TEST(CommonDimensionTest, Mismatch) {
  const std::vector<DenseVector> in = {DenseVector({1}), DenseVector({1, 1})};
  EXPECT_THROW(CommonDimension(in), InputError);
}

}  // namespace
}  // namespace quadpart
