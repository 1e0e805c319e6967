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

#include <cctype>
#include <limits>
#include <sstream>
#include <string>

#include "quadpart/errors.h"

namespace quadpart {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view{"1"}
                             : body.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) {
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  }
  const BigInt n{std::string(num)};
  const BigInt d{std::string(den)};
  if (d == 0) {
    throw InputError("zero denominator: \"" + std::string(text) + "\"");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string FormatRational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string FormatDecimal(const Rational& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  // Round half up at the last digit.
  BigInt scaled = (num * pow10 * 2 + den) / (den * 2);
  const BigInt whole = scaled / pow10;
  const BigInt frac = scaled % pow10;
  std::string frac_str = frac.str();
  if (static_cast<int>(frac_str.size()) < digits) {
    frac_str.insert(0, digits - frac_str.size(), '0');
  }
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

std::int64_t ToInt64(const BigInt& value, std::string_view what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw SizeError(std::string(what) + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace quadpart
