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

#ifndef QUADPART_VECTOR_H_
#define QUADPART_VECTOR_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "quadpart/rational.h"

namespace quadpart {

// A nonnegative vector with exact rational components.
class DenseVector {
 public:
  // Throws InputError if `components` is empty or has a negative entry.
  explicit DenseVector(std::vector<Rational> components);
  DenseVector(std::initializer_list<int> components);

  static DenseVector Zero(std::size_t dim);

  std::size_t dim() const { return components_.size(); }
  const Rational& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Rational>& components() const { return components_; }

  bool IsBinary() const;

  friend bool operator==(const DenseVector&, const DenseVector&) = default;
  friend auto operator<=>(const DenseVector& a, const DenseVector& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Rational> components_;
};

// Component-wise maximum.
DenseVector Join(const DenseVector& u, const DenseVector& v);
DenseVector Join(std::span<const DenseVector> vectors);

// Sum of components (number of ones for binary vectors).
Rational Weight(const DenseVector& v);

// Sum of component-wise minima. Satisfies
//   Weight(u) + Weight(v) == Savings(u, v) + Weight(Join(u, v)).
Rational Savings(const DenseVector& u, const DenseVector& v);

// Weight of the four-way join.
Rational QuadCost(const DenseVector& a, const DenseVector& b,
                  const DenseVector& c, const DenseVector& d);

// Weight of the join of an arbitrary non-empty group.
Rational GroupCost(std::span<const DenseVector> vectors);

// True iff every component of every vector is 0 or 1.
bool IsBinary(std::span<const DenseVector> vectors);

// Throws InputError unless every vector has the same dimension.
std::size_t CommonDimension(std::span<const DenseVector> vectors);

struct BinaryExpansionLimits {
  // Maximum dimension of the expanded binary vectors.
  std::size_t max_expanded_dim = 1 << 16;
};

// Rewrites rational vectors as {0,1}-vectors that preserve the cost of every
// subset: scale by the least common denominator, then expand component i into
// M_i slots (M_i = max value of component i), writing value x as x ones
// followed by M_i - x zeros. Components with M_i = 0 disappear; if every
// component vanishes the result is a single all-zero slot so that vectors keep
// a positive dimension. Throws SizeError beyond `limits`.
std::vector<DenseVector> ToBinary(std::span<const DenseVector> vectors,
                                  const BinaryExpansionLimits& limits = {});

// Integer image of a vector set: every component multiplied by `scale` (the
// least common denominator). Costs computed on `values` divide by `scale`.
struct ScaledVectors {
  std::size_t count = 0;
  std::size_t dim = 0;
  BigInt scale = 1;
  std::vector<std::int64_t> values;  // row-major count x dim

  std::span<const std::int64_t> row(std::size_t i) const {
    return {values.data() + i * dim, dim};
  }
  Rational Unscale(std::int64_t scaled_cost) const {
    return Rational(BigInt(scaled_cost), scale);
  }
};

// Throws SizeError if some scaled component (or the sum of a row) does not
// fit comfortably in int64.
ScaledVectors Scale(std::span<const DenseVector> vectors);

std::int64_t ScaledPairCost(const ScaledVectors& s, std::size_t i,
                            std::size_t j);
std::int64_t ScaledGroupCost(const ScaledVectors& s,
                             std::span<const std::size_t> members);

}  // namespace quadpart

#endif  // QUADPART_VECTOR_H_
