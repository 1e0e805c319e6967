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

// Maximum-weight matching on general graphs: primal-dual blossom method with
// least-slack edge tracking per blossom, O(n^3). Vertex duals, slacks and
// deltas are all kept doubled so integer weights stay integral throughout.

#include "blossom.h"

#include <algorithm>
#include <cassert>

namespace quadpart::internal {
namespace {

constexpr int kFree = 0;
constexpr int kS = 1;
constexpr int kT = 2;
constexpr int kBreadcrumb = 4;

class Matcher {
 public:
  Matcher(int vertex_count, std::span<const WeightedEdge> edges)
      : n_(vertex_count), edges_(edges.begin(), edges.end()) {
    const int m = static_cast<int>(edges_.size());
    std::int64_t max_weight = 0;
    for (const auto& e : edges_) max_weight = std::max(max_weight, e.weight);
    endpoint_.resize(2 * m);
    neighbend_.resize(n_);
    for (int k = 0; k < m; ++k) {
      endpoint_[2 * k] = edges_[k].u;
      endpoint_[2 * k + 1] = edges_[k].v;
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, kFree);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n_, -1);
    blossomchilds_.assign(2 * n_, {});
    blossomendps_.assign(2 * n_, {});
    blossombase_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) blossombase_[v] = v;
    bestedge_.assign(2 * n_, -1);
    blossombestedges_.assign(2 * n_, {});
    has_bestedges_.assign(2 * n_, 0);
    for (int b = 2 * n_ - 1; b >= n_; --b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * n_, 0);
    for (int v = 0; v < n_; ++v) dualvar_[v] = max_weight;
    allowedge_.assign(m, 0);
  }

  std::vector<int> Solve(bool max_cardinality);

 private:
  std::int64_t Slack(int k) const {
    const auto& e = edges_[k];
    return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
  }

  void Leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) Leaves(t, out);
  }
  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }

  void AssignLabel(int w, int t, int p);
  int ScanBlossom(int v, int w);
  void AddBlossom(int base, int k);
  void ExpandBlossom(int b, bool endstage);
  void AugmentBlossom(int b, int v);
  void AugmentMatching(int k);

  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> blossombase_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<std::int64_t> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

void Matcher::AssignLabel(int w, int t, int p) {
  for (;;) {
    const int b = inblossom_[w];
    assert(label_[w] == kFree && label_[b] == kFree);
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == kS) {
      Leaves(b, queue_);
      return;
    }
    // T-blossom: its mate becomes S.
    const int base = blossombase_[b];
    assert(mate_[base] >= 0);
    w = endpoint_[mate_[base]];
    t = kS;
    p = mate_[base] ^ 1;
  }
}

int Matcher::ScanBlossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & kBreadcrumb) {
      base = blossombase_[b];
      break;
    }
    assert(label_[b] == kS);
    path.push_back(b);
    label_[b] = kS | kBreadcrumb;
    assert(labelend_[b] == mate_[blossombase_[b]]);
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint_[labelend_[b]];
      b = inblossom_[v];
      assert(label_[b] == kT);
      assert(labelend_[b] >= 0);
      v = endpoint_[labelend_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = kS;
  return base;
}

void Matcher::AddBlossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unusedblossoms_.back();
  unusedblossoms_.pop_back();
  blossombase_[b] = base;
  blossomparent_[b] = -1;
  blossomparent_[bb] = b;
  std::vector<int>& path = blossomchilds_[b];
  std::vector<int>& endps = blossomendps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    blossomparent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    assert(labelend_[bv] >= 0);
    v = endpoint_[labelend_[bv]];
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossomparent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    assert(labelend_[bw] >= 0);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  assert(label_[bb] == kS);
  label_[b] = kS;
  labelend_[b] = labelend_[bb];
  dualvar_[b] = 0;
  for (int leaf : Leaves(b)) {
    if (label_[inblossom_[leaf]] == kT) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }
  std::vector<int> bestedgeto(2 * n_, -1);
  for (int sub : path) {
    std::vector<std::vector<int>> nblists;
    if (!has_bestedges_[sub]) {
      for (int leaf : Leaves(sub)) {
        std::vector<int> list;
        list.reserve(neighbend_[leaf].size());
        for (int p : neighbend_[leaf]) list.push_back(p / 2);
        nblists.push_back(std::move(list));
      }
    } else {
      nblists.push_back(blossombestedges_[sub]);
    }
    for (const auto& nblist : nblists) {
      for (int kk : nblist) {
        int i = edges_[kk].u;
        int j = edges_[kk].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == kS &&
            (bestedgeto[bj] == -1 || Slack(kk) < Slack(bestedgeto[bj]))) {
          bestedgeto[bj] = kk;
        }
      }
    }
    blossombestedges_[sub].clear();
    has_bestedges_[sub] = 0;
    bestedge_[sub] = -1;
  }
  blossombestedges_[b].clear();
  for (int kk : bestedgeto) {
    if (kk != -1) blossombestedges_[b].push_back(kk);
  }
  has_bestedges_[b] = 1;
  bestedge_[b] = -1;
  for (int kk : blossombestedges_[b]) {
    if (bestedge_[b] == -1 || Slack(kk) < Slack(bestedge_[b])) {
      bestedge_[b] = kk;
    }
  }
}

void Matcher::ExpandBlossom(int b, bool endstage) {
  // Copy: recursive expansion recycles entries of blossomchilds_.
  const std::vector<int> childs = blossomchilds_[b];
  for (int s : childs) {
    blossomparent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dualvar_[s] == 0) {
      ExpandBlossom(s, endstage);
    } else {
      for (int leaf : Leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == kT) {
    assert(labelend_[b] >= 0);
    const std::vector<int>& kids = blossomchilds_[b];
    const std::vector<int>& endps = blossomendps_[b];
    const int len = static_cast<int>(kids.size());
    auto at = [len](const std::vector<int>& xs, int idx) {
      return xs[((idx % len) + len) % len];
    };
    const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    int j = static_cast<int>(std::find(kids.begin(), kids.end(), entrychild) -
                             kids.begin());
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = kFree;
      label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = kFree;
      AssignLabel(endpoint_[p ^ 1], kT, p);
      allowedge_[at(endps, j - endptrick) / 2] = 1;
      j += jstep;
      p = at(endps, j - endptrick) ^ endptrick;
      allowedge_[p / 2] = 1;
      j += jstep;
    }
    int bv = at(kids, j);
    label_[endpoint_[p ^ 1]] = label_[bv] = kT;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (at(kids, j) != entrychild) {
      bv = at(kids, j);
      if (label_[bv] == kS) {
        j += jstep;
        continue;
      }
      int reached = -1;
      for (int leaf : Leaves(bv)) {
        if (label_[leaf] != kFree) {
          reached = leaf;
          break;
        }
      }
      if (reached != -1) {
        assert(label_[reached] == kT);
        assert(inblossom_[reached] == bv);
        label_[reached] = kFree;
        label_[endpoint_[mate_[blossombase_[bv]]]] = kFree;
        AssignLabel(reached, kT, labelend_[reached]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  blossomchilds_[b].clear();
  blossomendps_[b].clear();
  blossombase_[b] = -1;
  blossombestedges_[b].clear();
  has_bestedges_[b] = 0;
  bestedge_[b] = -1;
  unusedblossoms_.push_back(b);
}

void Matcher::AugmentBlossom(int b, int v) {
  int t = v;
  while (blossomparent_[t] != b) t = blossomparent_[t];
  if (t >= n_) AugmentBlossom(t, v);
  std::vector<int>& kids = blossomchilds_[b];
  std::vector<int>& endps = blossomendps_[b];
  const int len = static_cast<int>(kids.size());
  auto at = [len](const std::vector<int>& xs, int idx) {
    return xs[((idx % len) + len) % len];
  };
  const int i =
      static_cast<int>(std::find(kids.begin(), kids.end(), t) - kids.begin());
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= len;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = at(kids, j);
    const int p = at(endps, j - endptrick) ^ endptrick;
    if (t >= n_) AugmentBlossom(t, endpoint_[p]);
    j += jstep;
    t = at(kids, j);
    if (t >= n_) AugmentBlossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(kids.begin(), kids.begin() + i, kids.end());
  std::rotate(endps.begin(), endps.begin() + i, endps.end());
  blossombase_[b] = blossombase_[kids.front()];
  assert(blossombase_[b] == v);
}

void Matcher::AugmentMatching(int k) {
  const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
  for (const auto& [start, remote] : ends) {
    int s = start;
    int p = remote;
    for (;;) {
      const int bs = inblossom_[s];
      assert(label_[bs] == kS);
      assert(labelend_[bs] == mate_[blossombase_[bs]]);
      if (bs >= n_) AugmentBlossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint_[labelend_[bs]];
      const int bt = inblossom_[t];
      assert(label_[bt] == kT);
      assert(labelend_[bt] >= 0);
      s = endpoint_[labelend_[bt]];
      const int j = endpoint_[labelend_[bt] ^ 1];
      assert(blossombase_[bt] == t);
      if (bt >= n_) AugmentBlossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> Matcher::Solve(bool max_cardinality) {
  const int m = static_cast<int>(edges_.size());
  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), kFree);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = 0;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == kFree) {
        AssignLabel(v, kS, -1);
      }
    }
    bool augmented = false;
    for (;;) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        assert(label_[inblossom_[v]] == kS);
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[k]) {
            kslack = Slack(k);
            if (kslack <= 0) allowedge_[k] = 1;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == kFree) {
              AssignLabel(w, kT, p ^ 1);
            } else if (label_[inblossom_[w]] == kS) {
              const int base = ScanBlossom(v, w);
              if (base >= 0) {
                AddBlossom(base, k);
              } else {
                AugmentMatching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == kFree) {
              assert(label_[inblossom_[w]] == kT);
              label_[w] = kT;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == kS) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) {
              bestedge_[b] = k;
            }
          } else if (label_[w] == kFree) {
            if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) {
              bestedge_[w] = k;
            }
          }
        }
      }
      if (augmented) break;

      int deltatype = -1;
      std::int64_t delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality) {
        deltatype = 1;
        delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == kFree && bestedge_[v] != -1) {
          const std::int64_t d = Slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == kS && bestedge_[b] != -1) {
          const std::int64_t kslack = Slack(bestedge_[b]);
          assert(kslack % 2 == 0);
          const std::int64_t d = kslack / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 &&
            label_[b] == kT && (deltatype == -1 || dualvar_[b] < delta)) {
          delta = dualvar_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        // Max-cardinality optimum reached; final update keeps duals valid.
        assert(max_cardinality);
        deltatype = 1;
        delta = std::max<std::int64_t>(
            0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == kS) {
          dualvar_[v] -= delta;
        } else if (label_[inblossom_[v]] == kT) {
          dualvar_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == kS) {
            dualvar_[b] += delta;
          } else if (label_[b] == kT) {
            dualvar_[b] -= delta;
          }
        }
      }
      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = 1;
        int i = edges_[deltaedge].u;
        if (label_[inblossom_[i]] == kFree) i = edges_[deltaedge].v;
        assert(label_[inblossom_[i]] == kS);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = 1;
        const int i = edges_[deltaedge].u;
        assert(label_[inblossom_[i]] == kS);
        queue_.push_back(i);
      } else {
        ExpandBlossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == kS &&
          dualvar_[b] == 0) {
        ExpandBlossom(b, true);
      }
    }
  }
  (void)m;
  std::vector<int> result(n_, -1);
  for (int v = 0; v < n_; ++v) {
    if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
  }
  return result;
}

}  // namespace

std::vector<int> MaxWeightMatching(int vertex_count,
                                   std::span<const WeightedEdge> edges,
                                   bool max_cardinality) {
  if (vertex_count == 0 || edges.empty()) {
    return std::vector<int>(vertex_count, -1);
  }
  Matcher matcher(vertex_count, edges);
  return matcher.Solve(max_cardinality);
}

}  // namespace quadpart::internal
