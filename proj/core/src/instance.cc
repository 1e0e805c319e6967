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

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "quadpart/errors.h"

namespace quadpart {
namespace {

// mt19937_64 output is fully specified; distributions are not, so sampling
// goes through this helper to keep instances identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void Shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::size_t Choose2(std::size_t n) { return n * (n - 1) / 2; }

DenseVector EdgeVector(std::size_t dim, std::size_t u, std::size_t v) {
  std::vector<Rational> c(dim, Rational(0));
  c[u - 1] = 1;
  c[v - 1] = 1;
  return DenseVector(std::move(c));
}

Instance FromEdges(std::size_t nodes,
                   std::initializer_list<std::pair<int, int>> edges,
                   std::string name) {
  GraphView g{nodes, {}};
  for (auto [u, v] : edges) {
    g.edges.push_back(
        {static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  return FromGraph(g, std::move(name));
}

std::vector<std::size_t> TouchedNodes(const GraphView& g) {
  std::set<std::size_t> nodes;
  for (const GraphEdge& e : g.edges) {
    nodes.insert(e.u);
    nodes.insert(e.v);
  }
  return {nodes.begin(), nodes.end()};
}

std::vector<std::vector<std::size_t>> Adjacency(const GraphView& g) {
  std::vector<std::vector<std::size_t>> adj(g.node_count + 1);
  for (const GraphEdge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void Infeasible(InstanceClass cls, std::size_t k, std::size_t size) {
  throw InputError("no " + std::string(ClassName(cls)) + " instance with k=" +
                   std::to_string(k) + " and size " + std::to_string(size));
}

GraphView RandomConnected(std::size_t nodes, std::size_t edges, Rng& rng) {
  std::vector<std::size_t> perm(nodes);
  std::iota(perm.begin(), perm.end(), 1);
  rng.Shuffle(perm);
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  for (std::size_t i = 1; i < nodes; ++i) {
    const std::size_t parent = perm[rng.Below(i)];
    chosen.insert(std::minmax(perm[i], parent));
  }
  std::vector<std::pair<std::size_t, std::size_t>> spare;
  for (std::size_t u = 1; u <= nodes; ++u) {
    for (std::size_t v = u + 1; v <= nodes; ++v) {
      if (!chosen.count({u, v})) spare.push_back({u, v});
    }
  }
  rng.Shuffle(spare);
  for (std::size_t i = 0; chosen.size() < edges; ++i) chosen.insert(spare[i]);
  GraphView g{nodes, {}};
  for (auto [u, v] : chosen) g.edges.push_back({u, v});
  rng.Shuffle(g.edges);
  return g;
}

GraphView RandomDisconnected(std::size_t nodes, std::size_t edges, Rng& rng) {
  std::vector<std::size_t> splits;
  for (std::size_t a = 2; a + 2 <= nodes; ++a) {
    if (Choose2(a) + Choose2(nodes - a) >= edges) splits.push_back(a);
  }
  const std::size_t a = splits[rng.Below(splits.size())];
  std::vector<std::size_t> perm(nodes);
  std::iota(perm.begin(), perm.end(), 1);
  rng.Shuffle(perm);
  std::vector<std::pair<std::size_t, std::size_t>> side_a;
  std::vector<std::pair<std::size_t, std::size_t>> side_b;
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = i + 1; j < nodes; ++j) {
      auto e = std::minmax(perm[i], perm[j]);
      if (j < a) {
        side_a.push_back(e);
      } else if (i >= a) {
        side_b.push_back(e);
      }
    }
  }
  rng.Shuffle(side_a);
  rng.Shuffle(side_b);
  // One edge on each side keeps both components non-empty.
  std::vector<std::pair<std::size_t, std::size_t>> picked = {side_a.back(),
                                                             side_b.back()};
  side_a.pop_back();
  side_b.pop_back();
  std::vector<std::pair<std::size_t, std::size_t>> pool = side_a;
  pool.insert(pool.end(), side_b.begin(), side_b.end());
  rng.Shuffle(pool);
  for (std::size_t i = 0; picked.size() < edges; ++i) picked.push_back(pool[i]);
  GraphView g{nodes, {}};
  for (auto [u, v] : picked) g.edges.push_back({u, v});
  rng.Shuffle(g.edges);
  return g;
}

}  // namespace

Instance::Instance(std::vector<DenseVector> vectors, std::string name)
    : vectors_(std::move(vectors)), name_(std::move(name)) {
  if (vectors_.empty() || vectors_.size() % 4 != 0) {
    throw InputError("instance needs a positive multiple of 4 vectors, got " +
                     std::to_string(vectors_.size()));
  }
  CommonDimension(vectors_);
}

std::string_view ClassName(InstanceClass c) {
  switch (c) {
    case InstanceClass::kGeneral:
      return "General";
    case InstanceClass::kOneOrTwoOnes:
      return "OneOrTwoOnes";
    case InstanceClass::kTwoOnes:
      return "TwoOnes";
    case InstanceClass::kTwoOnesDistinct:
      return "TwoOnesDistinct";
    case InstanceClass::kTwoOnesDistinctConnected:
      return "TwoOnesDistinctConnected";
  }
  return "?";
}

InstanceClass ParseClass(std::string_view name) {
  for (InstanceClass c : kAllClasses) {
    if (ClassName(c) == name) return c;
  }
  throw InputError("unknown instance class \"" + std::string(name) + "\"");
}

InstanceClass Classify(const Instance& instance) {
  const auto& vs = instance.vectors();
  if (!IsBinary(vs)) return InstanceClass::kGeneral;
  bool all_two = true;
  for (const DenseVector& v : vs) {
    const Rational w = Weight(v);
    if (w != 1 && w != 2) return InstanceClass::kGeneral;
    all_two = all_two && w == 2;
  }
  if (!all_two) return InstanceClass::kOneOrTwoOnes;
  const std::set<DenseVector> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return InstanceClass::kTwoOnes;
  return IsConnected(ToGraph(instance))
             ? InstanceClass::kTwoOnesDistinctConnected
             : InstanceClass::kTwoOnesDistinct;
}

GraphView ToGraph(const Instance& instance) {
  GraphView g{instance.dim(), {}};
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const DenseVector& v = instance.vectors()[i];
    std::vector<std::size_t> ones;
    for (std::size_t c = 0; c < v.dim(); ++c) {
      if (v[c] == 1) {
        ones.push_back(c + 1);
      } else if (v[c] != 0) {
        ones.clear();
        break;
      }
    }
    if (ones.size() != 2) {
      throw InputError("vector " + std::to_string(i + 1) +
                       " is not a {0,1}-vector with exactly two ones");
    }
    g.edges.push_back({ones[0], ones[1]});
  }
  return g;
}

Instance FromGraph(const GraphView& graph, std::string name) {
  std::vector<DenseVector> vectors;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const GraphEdge& e = graph.edges[i];
    if (e.u < 1 || e.v < 1 || e.u > graph.node_count ||
        e.v > graph.node_count) {
      throw InputError("edges[" + std::to_string(i) + "]: label outside 1.." +
                       std::to_string(graph.node_count));
    }
    if (e.u == e.v) {
      throw InputError("edges[" + std::to_string(i) + "]: loop at node " +
                       std::to_string(e.u));
    }
    vectors.push_back(EdgeVector(graph.node_count, e.u, e.v));
  }
  return Instance(std::move(vectors), std::move(name));
}

bool IsConnected(const GraphView& graph) {
  const std::vector<std::size_t> touched = TouchedNodes(graph);
  if (touched.empty()) return true;
  const auto adj = Adjacency(graph);
  std::vector<char> seen(graph.node_count + 1, 0);
  std::vector<std::size_t> stack = {touched.front()};
  seen[touched.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == touched.size();
}

bool IsBipartite(const GraphView& graph) {
  const auto adj = Adjacency(graph);
  std::vector<int> color(graph.node_count + 1, -1);
  for (std::size_t s : TouchedNodes(graph)) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> stack = {s};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool IsSimple(const GraphView& graph) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const GraphEdge& e : graph.edges) {
    if (e.u == e.v || !seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

std::span<const std::string_view> BuiltinInstanceNames() {
  static constexpr std::array<std::string_view, 6> kNames = {
      "pq_lb8",    "pq_allzero8", "pq2_lb8",
      "pq2dc_lb8", "greedy_pq12", "greedy_pq2dc8"};
  return kNames;
}

Instance BuiltinInstance(std::string_view name) {
  const std::string label(name);
  if (name == "pq_lb8") {
    return Instance({{1, 0, 0, 0},
                     {0, 1, 0, 0},
                     {0, 0, 1, 0},
                     {0, 0, 0, 1},
                     {1, 1, 0, 0},
                     {1, 1, 0, 0},
                     {0, 0, 1, 1},
                     {0, 0, 1, 1}},
                    label);
  }
  if (name == "pq_allzero8") {
    return Instance(
        {{1, 0}, {1, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 1}, {0, 1}, {0, 0}},
        label);
  }
  if (name == "pq2_lb8") {
    return FromEdges(
        5, {{1, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 5}},
        label);
  }
  if (name == "pq2dc_lb8") {
    return FromEdges(
        7, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},
        label);
  }
  if (name == "greedy_pq12") {
    return Instance({{0, 0, 0},
                     {0, 0, 0},
                     {0, 0, 0},
                     {1, 0, 0},
                     {1, 0, 0},
                     {1, 0, 0},
                     {0, 1, 0},
                     {0, 1, 0},
                     {0, 1, 0},
                     {0, 0, 1},
                     {0, 0, 1},
                     {0, 0, 1}},
                    label);
  }
  if (name == "greedy_pq2dc8") {
    return FromEdges(
        9, {{1, 2}, {2, 5}, {3, 5}, {3, 4}, {6, 7}, {5, 7}, {5, 8}, {8, 9}},
        label);
  }
  throw InputError("unknown built-in instance \"" + label + "\"");
}

std::pair<std::size_t, std::size_t> FeasibleSizes(InstanceClass cls,
                                                  std::size_t k) {
  const std::size_t m = 4 * k;
  switch (cls) {
    case InstanceClass::kGeneral:
      return {1, 64};
    case InstanceClass::kOneOrTwoOnes:
      return {2, 64};
    case InstanceClass::kTwoOnes:
      return {2, 2 * m};
    case InstanceClass::kTwoOnesDistinct: {
      std::size_t n = 4;
      while (Choose2(n - 2) + 1 < m) ++n;
      return {n, 2 * m};
    }
    case InstanceClass::kTwoOnesDistinctConnected: {
      std::size_t n = 2;
      while (Choose2(n) < m) ++n;
      return {n, m + 1};
    }
  }
  return {0, 0};
}

Instance Generate(InstanceClass cls, std::size_t k, std::size_t size,
                  std::uint64_t seed) {
  if (k == 0) throw InputError("k must be positive");
  const auto [lo, hi] = FeasibleSizes(cls, k);
  if (size < lo || size > hi) Infeasible(cls, k, size);
  Rng rng(seed);
  const std::size_t m = 4 * k;
  const std::string name = std::string(ClassName(cls)) + "-k" +
                           std::to_string(k) + "-s" + std::to_string(size) +
                           "-seed" + std::to_string(seed);
  switch (cls) {
    case InstanceClass::kGeneral: {
      static constexpr int kDenominators[] = {1, 1, 1, 2};
      std::vector<DenseVector> vs;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> c(size);
        for (auto& x : c) {
          x = Rational(static_cast<int>(rng.Below(4)),
                       kDenominators[rng.Below(4)]);
        }
        // A component outside {0, 1} pins the class to General.
        if (i == 0) c[rng.Below(size)] = 2;
        vs.emplace_back(std::move(c));
      }
      return Instance(std::move(vs), name);
    }
    case InstanceClass::kOneOrTwoOnes: {
      std::vector<DenseVector> vs;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> c(size, Rational(0));
        const std::size_t ones = i == 0 ? 1 : 1 + rng.Below(2);
        const std::size_t a = rng.Below(size);
        c[a] = 1;
        if (ones == 2) {
          std::size_t b = rng.Below(size - 1);
          if (b >= a) ++b;
          c[b] = 1;
        }
        vs.emplace_back(std::move(c));
      }
      return Instance(std::move(vs), name);
    }
    case InstanceClass::kTwoOnes: {
      GraphView g{size, {}};
      for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t u = 1 + rng.Below(size);
        std::size_t v = 1 + rng.Below(size - 1);
        if (v >= u) ++v;
        g.edges.push_back({std::min(u, v), std::max(u, v)});
      }
      g.edges.push_back(g.edges[rng.Below(g.edges.size())]);
      rng.Shuffle(g.edges);
      return FromGraph(g, name);
    }
    case InstanceClass::kTwoOnesDistinct:
      return FromGraph(RandomDisconnected(size, m, rng), name);
    case InstanceClass::kTwoOnesDistinctConnected:
      return FromGraph(RandomConnected(size, m, rng), name);
  }
  Infeasible(cls, k, size);
  return BuiltinInstance("");  // unreachable
}

Instance Epc4Reduce(const GraphView& graph) {
  if (graph.edges.empty() || graph.edges.size() % 4 != 0) {
    throw InputError("EPC4 needs 4k edges, got " +
                     std::to_string(graph.edges.size()));
  }
  if (!IsSimple(graph)) throw InputError("EPC4 graph must be simple");
  if (!IsBipartite(graph)) throw InputError("EPC4 graph must be bipartite");
  if (!IsConnected(graph)) throw InputError("EPC4 graph must be connected");
  return FromGraph(graph, "epc4");
}

}  // namespace quadpart
