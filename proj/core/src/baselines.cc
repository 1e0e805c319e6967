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

#include "quadpart/baselines.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "quadpart/errors.h"
#include "quadpart/matching.h"

namespace quadpart {
namespace {

using Mask = std::uint32_t;

// Masks are 32-bit; 8 quads is far beyond what exhaustive search can finish.
constexpr std::size_t kHardMaxK = 8;
// Largest vector count for which the matching bound is tabulated for every
// subset; above it the engine is called per subset and memoized.
constexpr std::size_t kDenseBoundLimit = 20;

void RequireQuadCount(std::size_t count) {
  if (count == 0 || count % 4 != 0) {
    throw InputError("need a positive multiple of 4 vectors, got " +
                     std::to_string(count));
  }
}

class QuadCosts {
 public:
  explicit QuadCosts(const ScaledVectors& s) : s_(s) {}

  std::int64_t operator()(std::size_t a, std::size_t b, std::size_t c,
                          std::size_t d) const {
    const std::size_t members[4] = {a, b, c, d};
    return ScaledGroupCost(s_, members);
  }

 private:
  const ScaledVectors& s_;
};

class ExactSearch {
 public:
  ExactSearch(const ScaledVectors& scaled, const SearchLimits& limits)
      : s_(scaled),
        n_(scaled.count),
        quad_cost_(scaled),
        pair_costs_(CostMatrix::PairCosts(scaled)),
        budget_(limits.node_budget) {
    weights_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto row = s_.row(i);
      weights_[i] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
    }
    by_weight_.resize(n_);
    std::iota(by_weight_.begin(), by_weight_.end(), 0);
    std::stable_sort(by_weight_.begin(), by_weight_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return weights_[a] > weights_[b];
                     });
    if (n_ <= kDenseBoundLimit) TabulateMatchingBound();
  }

  void SetIncumbent(std::int64_t cost, std::vector<Quad> quads) {
    incumbent_ = cost;
    best_ = std::move(quads);
  }

  void Run() {
    const Mask all = n_ == 32 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    Search(all, 0);
  }

  std::int64_t incumbent() const { return incumbent_; }
  const std::vector<Quad>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void TabulateMatchingBound() {
    dense_bound_.assign(std::size_t{1} << n_, 0);
    for (Mask mask = 1; mask < (Mask{1} << n_); ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      const int low = std::countr_zero(mask);
      Mask rest = mask & (mask - 1);
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (Mask it = rest; it != 0; it &= it - 1) {
        const int j = std::countr_zero(it);
        best = std::min(
            best, pair_costs_(low, j) + dense_bound_[rest & ~(Mask{1} << j)]);
      }
      dense_bound_[mask] = best;
    }
  }

  std::int64_t MatchingCost(Mask mask) {
    if (!dense_bound_.empty()) return dense_bound_[mask];
    if (auto it = sparse_bound_.find(mask); it != sparse_bound_.end()) {
      return it->second;
    }
    std::vector<std::size_t> members;
    for (Mask it = mask; it != 0; it &= it - 1) {
      members.push_back(std::countr_zero(it));
    }
    CostMatrix sub(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        sub.set(a, b, pair_costs_(members[a], members[b]));
      }
    }
    const std::int64_t cost = MinCostPerfectMatching(sub).cost;
    sparse_bound_.emplace(mask, cost);
    return cost;
  }

  std::int64_t LowerBound(Mask mask) {
    if (mask == 0) return 0;
    const std::int64_t matching = (MatchingCost(mask) + 1) / 2;
    std::int64_t heaviest = 0;
    std::size_t seen = 0;
    for (std::size_t i : by_weight_) {
      if (!(mask >> i & 1)) continue;
      if (seen % 4 == 0) heaviest += weights_[i];
      ++seen;
    }
    return std::max(matching, heaviest);
  }

  void Search(Mask mask, std::int64_t acc) {
    if (mask == 0) {
      if (acc < incumbent_) {
        incumbent_ = acc;
        best_ = current_;
      }
      return;
    }
    if (++nodes_ > budget_) {
      throw SizeError("exact search exceeded node budget of " +
                      std::to_string(budget_));
    }
    if (acc + LowerBound(mask) >= incumbent_) return;

    const std::size_t anchor = std::countr_zero(mask);
    const Mask rest = mask & (mask - 1);
    std::vector<std::size_t> others;
    for (Mask it = rest; it != 0; it &= it - 1) {
      others.push_back(std::countr_zero(it));
    }
    struct Child {
      std::int64_t bound;
      std::int64_t cost;
      Quad quad;
      Mask remaining;
    };
    std::vector<Child> children;
    const std::size_t m = others.size();
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        for (std::size_t z = y + 1; z < m; ++z) {
          const std::int64_t cost =
              quad_cost_(anchor, others[x], others[y], others[z]);
          const Mask remaining = rest & ~(Mask{1} << others[x]) &
                                 ~(Mask{1} << others[y]) &
                                 ~(Mask{1} << others[z]);
          const std::int64_t bound = acc + cost + LowerBound(remaining);
          if (bound >= incumbent_) continue;
          children.push_back({bound,
                              cost,
                              {anchor, others[x], others[y], others[z]},
                              remaining});
        }
      }
    }
    std::stable_sort(
        children.begin(), children.end(),
        [](const Child& a, const Child& b) { return a.bound < b.bound; });
    for (const Child& c : children) {
      if (c.bound >= incumbent_) break;
      current_.push_back(c.quad);
      Search(c.remaining, acc + c.cost);
      current_.pop_back();
    }
  }

  const ScaledVectors& s_;
  std::size_t n_;
  QuadCosts quad_cost_;
  CostMatrix pair_costs_;
  std::uint64_t budget_;
  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> by_weight_;
  std::vector<std::int64_t> dense_bound_;
  std::unordered_map<Mask, std::int64_t> sparse_bound_;
  std::int64_t incumbent_ = std::numeric_limits<std::int64_t>::max();
  std::vector<Quad> best_;
  std::vector<Quad> current_;
  std::uint64_t nodes_ = 0;
};

std::int64_t ScaledPartitionCost(const ScaledVectors& s,
                                 std::span<const Quad> quads) {
  std::int64_t total = 0;
  for (const Quad& q : quads) total += ScaledGroupCost(s, q);
  return total;
}

std::vector<std::size_t> CanonicalOrder(const ScaledVectors& s) {
  std::vector<std::size_t> order(s.count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const auto ra = s.row(a);
                     const auto rb = s.row(b);
                     return std::lexicographical_compare(ra.begin(), ra.end(),
                                                         rb.begin(), rb.end());
                   });
  return order;
}

std::string QuadText(const Quad& q) {
  return "{" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
         std::to_string(q[2]) + "," + std::to_string(q[3]) + "}";
}

}  // namespace

ExactResult ExactOpt(std::span<const DenseVector> vectors,
                     const SearchLimits& limits) {
  RequireQuadCount(vectors.size());
  const std::size_t k = vectors.size() / 4;
  if (k > limits.max_k || k > kHardMaxK) {
    throw SizeError("exact solver limited to k <= " +
                    std::to_string(std::min(limits.max_k, kHardMaxK)) +
                    ", got k = " + std::to_string(k));
  }
  const ScaledVectors scaled = Scale(vectors);
  ExactSearch search(scaled, limits);

  // Seed the incumbent with the better of the two heuristics.
  std::vector<Quad> seed = RunAlgorithmA(vectors).partition.quads;
  std::int64_t seed_cost = ScaledPartitionCost(scaled, seed);
  std::vector<Quad> greedy = Greedy(vectors).quads;
  if (const std::int64_t c = ScaledPartitionCost(scaled, greedy);
      c < seed_cost) {
    seed = std::move(greedy);
    seed_cost = c;
  }
  search.SetIncumbent(seed_cost, seed);
  search.Run();

  ExactResult out;
  out.partition.quads = search.best();
  std::sort(out.partition.quads.begin(), out.partition.quads.end());
  out.partition.total_cost = scaled.Unscale(search.incumbent());
  out.opt_cost = out.partition.total_cost;
  out.nodes_explored = search.nodes();
  return out;
}

EnumerationResult EnumerateAllPartitions(std::span<const DenseVector> vectors,
                                         std::size_t max_k) {
  RequireQuadCount(vectors.size());
  const std::size_t n = vectors.size();
  if (n / 4 > max_k) {
    throw SizeError("unpruned enumeration limited to k <= " +
                    std::to_string(max_k));
  }
  const ScaledVectors scaled = Scale(vectors);
  const QuadCosts quad_cost(scaled);
  std::vector<char> used(n, 0);
  std::vector<Quad> current;
  std::vector<Quad> best;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  std::uint64_t visited = 0;

  auto recurse = [&](auto&& self, std::int64_t acc) -> void {
    std::size_t a = 0;
    while (a < n && used[a]) ++a;
    if (a == n) {
      ++visited;
      if (acc < best_cost) {
        best_cost = acc;
        best = current;
      }
      return;
    }
    used[a] = 1;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (used[c]) continue;
        used[c] = 1;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (used[d]) continue;
          used[d] = 1;
          current.push_back({a, b, c, d});
          self(self, acc + quad_cost(a, b, c, d));
          current.pop_back();
          used[d] = 0;
        }
        used[c] = 0;
      }
      used[b] = 0;
    }
    used[a] = 0;
  };
  recurse(recurse, 0);

  EnumerationResult out;
  out.best.quads = std::move(best);
  out.best.total_cost = scaled.Unscale(best_cost);
  out.partitions_visited = visited;
  return out;
}

QuadPartition Greedy(std::span<const DenseVector> vectors,
                     const GreedyOptions& options) {
  RequireQuadCount(vectors.size());
  const ScaledVectors scaled = Scale(vectors);
  const QuadCosts quad_cost(scaled);
  const std::vector<std::size_t> order = CanonicalOrder(scaled);
  const std::size_t n = vectors.size();
  std::vector<char> removed(n, 0);

  // Cheapest quad among remaining vectors, first in canonical order.
  auto cheapest = [&](std::int64_t* cost) {
    std::vector<std::size_t> live;
    for (std::size_t p : order) {
      if (!removed[p]) live.push_back(p);
    }
    const std::size_t m = live.size();
    Quad best{};
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        for (std::size_t c = b + 1; c < m; ++c) {
          for (std::size_t d = c + 1; d < m; ++d) {
            const std::int64_t q =
                quad_cost(live[a], live[b], live[c], live[d]);
            if (q < best_cost) {
              best_cost = q;
              best = {live[a], live[b], live[c], live[d]};
            }
          }
        }
      }
    }
    *cost = best_cost;
    std::sort(best.begin(), best.end());
    return best;
  };

  QuadPartition out;
  std::size_t script = 0;
  for (std::size_t round = 0; round < n / 4; ++round) {
    std::int64_t min_cost = 0;
    Quad pick = cheapest(&min_cost);
    if (script < options.scripted_choices.size()) {
      Quad q = options.scripted_choices[script++];
      std::sort(q.begin(), q.end());
      for (std::size_t t = 0; t < 4; ++t) {
        if (q[t] >= n || removed[q[t]] || (t > 0 && q[t] == q[t - 1])) {
          throw InputError("scripted greedy choice " + QuadText(q) +
                           " uses an invalid or already removed index");
        }
      }
      const std::int64_t c = quad_cost(q[0], q[1], q[2], q[3]);
      if (c != min_cost) {
        throw OptimalityError("scripted greedy choice " + QuadText(q) +
                              " costs " + FormatRational(scaled.Unscale(c)) +
                              " but the cheapest remaining quad costs " +
                              FormatRational(scaled.Unscale(min_cost)));
      }
      pick = q;
    }
    for (std::size_t i : pick) removed[i] = 1;
    out.quads.push_back(pick);
  }
  if (script < options.scripted_choices.size()) {
    throw InputError("greedy script has more choices than quads");
  }
  std::sort(out.quads.begin(), out.quads.end());
  out.total_cost = scaled.Unscale(ScaledPartitionCost(scaled, out.quads));
  return out;
}

}  // namespace quadpart
