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

#ifndef QUADPART_SRC_BLOSSOM_H_
#define QUADPART_SRC_BLOSSOM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace quadpart::internal {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

// Returns mate[v] (or -1) of a maximum-weight matching. With
// `max_cardinality`, the maximum-weight matching among maximum-cardinality
// matchings. Weights must satisfy |w| < 2^60.
std::vector<int> MaxWeightMatching(int vertex_count,
                                   std::span<const WeightedEdge> edges,
                                   bool max_cardinality);

}  // namespace quadpart::internal

#endif  // QUADPART_SRC_BLOSSOM_H_
