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

#ifndef QUADPART_INSTANCE_H_
#define QUADPART_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadpart/vector.h"

namespace quadpart {

// An ordered list of 4k vectors of one dimension, k >= 1.
class Instance {
 public:
  // Throws InputError on an empty list, a count not divisible by 4 or
  // mixed dimensions.
  explicit Instance(std::vector<DenseVector> vectors, std::string name = {});

  const std::vector<DenseVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  std::size_t k() const { return vectors_.size() / 4; }
  std::size_t dim() const { return vectors_.front().dim(); }
  const std::string& name() const { return name_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<DenseVector> vectors_;
  std::string name_;
};

// Special cases ordered from general to most specific.
enum class InstanceClass {
  kGeneral = 0,
  kOneOrTwoOnes,              // binary, one or two ones per vector
  kTwoOnes,                   // binary, exactly two ones (multigraph)
  kTwoOnesDistinct,           // ... and pairwise distinct (simple graph)
  kTwoOnesDistinctConnected,  // ... and the graph is connected
};

inline constexpr InstanceClass kAllClasses[] = {
    InstanceClass::kGeneral, InstanceClass::kOneOrTwoOnes,
    InstanceClass::kTwoOnes, InstanceClass::kTwoOnesDistinct,
    InstanceClass::kTwoOnesDistinctConnected};

std::string_view ClassName(InstanceClass c);
// Accepts the names returned by ClassName. Throws InputError otherwise.
InstanceClass ParseClass(std::string_view name);

// Most specific class the instance belongs to. Connectivity is judged on
// edge-touched nodes only.
InstanceClass Classify(const Instance& instance);

// Each two-one vector as an edge between its two nonzero components.
// Labels are 1-based; duplicates are kept in input order.
struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct GraphView {
  std::size_t node_count = 0;
  std::vector<GraphEdge> edges;
  friend bool operator==(const GraphView&, const GraphView&) = default;
};

// Requires class TwoOnes or finer (InputError otherwise).
GraphView ToGraph(const Instance& instance);
// One vector of dimension node_count per edge. Throws InputError on loops,
// labels outside 1..node_count, or an edge count not divisible by 4.
Instance FromGraph(const GraphView& graph, std::string name = {});

// True iff the edge-touched part of the graph is connected.
bool IsConnected(const GraphView& graph);
// Two-colorability of the edge-touched part.
bool IsBipartite(const GraphView& graph);
bool IsSimple(const GraphView& graph);

// Named instances from the worst-case constructions:
//   pq_lb8        8 vectors, one or two ones, A may reach 3/2 OPT
//   pq_allzero8   8 vectors in dimension 2 including two zero vectors
//   pq2_lb8       8 edges of a multigraph, A may reach 4/3 OPT
//   pq2dc_lb8     8 edges of a connected simple graph, A may reach 5/4 OPT
//   greedy_pq12   12 vectors, greedy may reach 2 OPT
//   greedy_pq2dc8 8 edges of a connected simple graph, greedy may reach
//                 13/10 OPT
Instance BuiltinInstance(std::string_view name);
std::span<const std::string_view> BuiltinInstanceNames();

// Random instance of exactly the requested class. `size` is the dimension
// for kGeneral / kOneOrTwoOnes and the node count for the graph classes.
// Deterministic per seed. Throws InputError when the parameters admit no
// such instance.
Instance Generate(InstanceClass cls, std::size_t k, std::size_t size,
                  std::uint64_t seed);

// Smallest and largest `size` accepted by Generate for (cls, k). For
// kGeneral / kOneOrTwoOnes the upper end is an arbitrary cap.
std::pair<std::size_t, std::size_t> FeasibleSizes(InstanceClass cls,
                                                  std::size_t k);

// Edge-to-vector map from C4-decomposition to quad partitioning: the graph
// splits into 4-cycles iff the optimum equals 4k. Requires a simple,
// bipartite, connected graph with 4k edges (InputError otherwise).
Instance Epc4Reduce(const GraphView& graph);

}  // namespace quadpart

#endif  // QUADPART_INSTANCE_H_
