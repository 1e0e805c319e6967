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

#ifndef QUADPART_RATIONAL_H_
#define QUADPART_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace quadpart {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "p/q" (q > 0). Throws InputError on malformed text.
Rational ParseRational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string FormatRational(const Rational& r);

// Decimal rendering with `digits` fractional digits, for convenience columns
// only. Never used for comparisons.
std::string FormatDecimal(const Rational& r, int digits = 6);

// Narrows an integer-valued rational; throws SizeError if it does not fit.
std::int64_t ToInt64(const BigInt& value, std::string_view what);

}  // namespace quadpart

#endif  // QUADPART_RATIONAL_H_
