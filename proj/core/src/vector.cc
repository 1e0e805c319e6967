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
#include <string>
#include <utility>

#include "quadpart/errors.h"

namespace quadpart {
namespace {

// Scaled instances must leave headroom for matching-weight perturbation.
constexpr std::int64_t kMaxScaledTotal = std::int64_t{1} << 36;

void RequireSameDim(const DenseVector& u, const DenseVector& v) {
  if (u.dim() != v.dim()) {
    throw InputError("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                     std::to_string(v.dim()));
  }
}

}  // namespace

DenseVector::DenseVector(std::vector<Rational> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw InputError("vector must have at least one component");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] < 0) {
      throw InputError("component " + std::to_string(i) +
                       " is negative: " + FormatRational(components_[i]));
    }
  }
}

DenseVector::DenseVector(std::initializer_list<int> components)
    : DenseVector(std::vector<Rational>(components.begin(), components.end())) {
}

DenseVector DenseVector::Zero(std::size_t dim) {
  return DenseVector(std::vector<Rational>(dim, Rational(0)));
}

bool DenseVector::IsBinary() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Rational& c) { return c == 0 || c == 1; });
}

DenseVector Join(const DenseVector& u, const DenseVector& v) {
  RequireSameDim(u, v);
  std::vector<Rational> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = std::max(u[i], v[i]);
  return DenseVector(std::move(out));
}

DenseVector Join(std::span<const DenseVector> vectors) {
  if (vectors.empty()) throw InputError("join of an empty group");
  DenseVector acc = vectors.front();
  for (const DenseVector& v : vectors.subspan(1)) acc = Join(acc, v);
  return acc;
}

Rational Weight(const DenseVector& v) {
  Rational total = 0;
  for (const Rational& c : v.components()) total += c;
  return total;
}

Rational Savings(const DenseVector& u, const DenseVector& v) {
  RequireSameDim(u, v);
  Rational total = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) total += std::min(u[i], v[i]);
  return total;
}

Rational QuadCost(const DenseVector& a, const DenseVector& b,
                  const DenseVector& c, const DenseVector& d) {
  return Weight(Join(Join(a, b), Join(c, d)));
}

Rational GroupCost(std::span<const DenseVector> vectors) {
  return Weight(Join(vectors));
}

bool IsBinary(std::span<const DenseVector> vectors) {
  return std::all_of(vectors.begin(), vectors.end(),
                     [](const DenseVector& v) { return v.IsBinary(); });
}

std::size_t CommonDimension(std::span<const DenseVector> vectors) {
  if (vectors.empty()) throw InputError("no vectors");
  const std::size_t dim = vectors.front().dim();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].dim() != dim) {
      throw InputError("vector " + std::to_string(i) + " has dimension " +
                       std::to_string(vectors[i].dim()) + ", expected " +
                       std::to_string(dim));
    }
  }
  return dim;
}

std::vector<DenseVector> ToBinary(std::span<const DenseVector> vectors,
                                  const BinaryExpansionLimits& limits) {
  if (vectors.empty()) return {};
  const ScaledVectors scaled = Scale(vectors);
  std::vector<std::int64_t> column_max(scaled.dim, 0);
  for (std::size_t i = 0; i < scaled.count; ++i) {
    const auto row = scaled.row(i);
    for (std::size_t c = 0; c < scaled.dim; ++c) {
      column_max[c] = std::max(column_max[c], row[c]);
    }
  }
  std::int64_t expanded = 0;
  for (std::int64_t m : column_max) expanded += m;
  if (expanded > static_cast<std::int64_t>(limits.max_expanded_dim)) {
    throw SizeError("binary expansion needs " + std::to_string(expanded) +
                    " components, limit is " +
                    std::to_string(limits.max_expanded_dim));
  }
  const std::size_t out_dim = expanded == 0 ? 1 : expanded;
  std::vector<DenseVector> out;
  out.reserve(scaled.count);
  for (std::size_t i = 0; i < scaled.count; ++i) {
    std::vector<Rational> bits(out_dim, Rational(0));
    std::size_t slot = 0;
    const auto row = scaled.row(i);
    for (std::size_t c = 0; c < scaled.dim; ++c) {
      for (std::int64_t j = 0; j < column_max[c]; ++j, ++slot) {
        if (j < row[c]) bits[slot] = 1;
      }
    }
    out.emplace_back(std::move(bits));
  }
  return out;
}

ScaledVectors Scale(std::span<const DenseVector> vectors) {
  ScaledVectors s;
  s.count = vectors.size();
  if (vectors.empty()) return s;
  s.dim = CommonDimension(vectors);
  BigInt lcd = 1;
  for (const DenseVector& v : vectors) {
    for (const Rational& c : v.components()) {
      lcd = boost::multiprecision::lcm(lcd,
                                       boost::multiprecision::denominator(c));
    }
  }
  s.scale = lcd;
  s.values.resize(s.count * s.dim);
  std::vector<BigInt> column_max(s.dim, 0);
  for (std::size_t i = 0; i < s.count; ++i) {
    for (std::size_t c = 0; c < s.dim; ++c) {
      const Rational& x = vectors[i][c];
      const BigInt scaled = boost::multiprecision::numerator(x) *
                            (lcd / boost::multiprecision::denominator(x));
      column_max[c] = std::max(column_max[c], scaled);
      s.values[i * s.dim + c] = ToInt64(scaled, "scaled component");
    }
  }
  BigInt total = 0;
  for (const BigInt& m : column_max) total += m;
  if (total > kMaxScaledTotal) {
    throw SizeError("instance magnitudes too large after scaling by " +
                    lcd.str());
  }
  return s;
}

std::int64_t ScaledPairCost(const ScaledVectors& s, std::size_t i,
                            std::size_t j) {
  const auto a = s.row(i);
  const auto b = s.row(j);
  std::int64_t total = 0;
  for (std::size_t c = 0; c < s.dim; ++c) total += std::max(a[c], b[c]);
  return total;
}

std::int64_t ScaledGroupCost(const ScaledVectors& s,
                             std::span<const std::size_t> members) {
  std::int64_t total = 0;
  for (std::size_t c = 0; c < s.dim; ++c) {
    std::int64_t m = 0;
    for (std::size_t i : members) m = std::max(m, s.values[i * s.dim + c]);
    total += m;
  }
  return total;
}

}  // namespace quadpart
