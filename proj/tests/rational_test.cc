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

#include "quadpart/rational.h"

#include "gtest/gtest.h"
#include "quadpart/errors.h"

namespace quadpart {
namespace {

TEST(RationalTest, ParsesIntegersAndFractions) {
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_EQ(ParseRational("-3"), Rational(-3));
  EXPECT_EQ(ParseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(ParseRational("+1/3"), Rational(1, 3));
  EXPECT_EQ(ParseRational("0/5"), Rational(0));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad :
       {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/-2", "1 /2", "--1"}) {
    EXPECT_THROW(ParseRational(bad), InputError) << bad;
  }
}

TEST(RationalTest, FormatsInLowestTerms) {
  EXPECT_EQ(FormatRational(Rational(6, 4)), "3/2");
  EXPECT_EQ(FormatRational(Rational(13, 10)), "13/10");
  EXPECT_EQ(FormatRational(Rational(8, 4)), "2");
  EXPECT_EQ(FormatRational(Rational(-1, 3)), "-1/3");
}

TEST(RationalTest, FormatRoundTrips) {
  for (int p = -20; p <= 20; ++p) {
    for (int q = 1; q <= 12; ++q) {
      const Rational r(p, q);
      EXPECT_EQ(ParseRational(FormatRational(r)), r);
    }
  }
}

TEST(RationalTest, DecimalRoundsHalfUp) {
  EXPECT_EQ(FormatDecimal(Rational(4, 3)), "1.333333");
  EXPECT_EQ(FormatDecimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(FormatDecimal(Rational(3, 2), 2), "1.50");
  EXPECT_EQ(FormatDecimal(Rational(5)), "5.000000");
}

TEST(RationalTest, ToInt64ChecksRange) {
  EXPECT_EQ(ToInt64(BigInt(42), "x"), 42);
  BigInt huge = 1;
  huge <<= 70;
  EXPECT_THROW(ToInt64(huge, "x"), SizeError);
}

}  // namespace
}  // namespace quadpart
