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

#ifndef QUADPART_IO_H_
#define QUADPART_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadpart/algorithm_a.h"
#include "quadpart/instance.h"
#include "quadpart/matching.h"

namespace quadpart {

// Instance file:
//   {"name": str?, "dim": int, "vectors": [[int | "p/q", ...], ...]}
// Graph file (1-based labels, duplicates allowed):
//   {"nodes": int, "edges": [[u, v], ...]}
// Parse errors name the offending JSON location, e.g. "vectors[2][1]".
Instance ParseInstance(std::string_view text,
                       std::string_view source = "<input>");
std::string SerializeInstance(const Instance& instance);

GraphView ParseGraph(std::string_view text,
                     std::string_view source = "<input>");
std::string SerializeGraph(const GraphView& graph);

// Reads either format, telling them apart by the "edges" key.
Instance ParseInstanceOrGraph(std::string_view text,
                              std::string_view source = "<input>");

// `ref` is a file path, or "builtin:<name>" for a built-in instance.
Instance LoadInstance(std::string_view ref);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view text);

inline constexpr std::size_t kInvalidIndex =
    std::numeric_limits<std::size_t>::max();

// Solution file. Group members are 1-based in the file and 0-based here;
// labels below 1 load as kInvalidIndex so verification can report them.
//   {"instance": str, "algorithm": str, "group_size": int?,
//    "quads": [[i, j, l, m], ...], "claimed_cost": "p/q",
//    "trace": {"cost_m", "weight_m_prime", "result_cost": "p/q"}?,
//    "round_cost": ["p/q", ...]?}
struct SolutionFile {
  std::string instance;
  std::string algorithm;
  std::size_t group_size = 4;
  std::vector<std::vector<std::size_t>> groups;
  Rational claimed_cost = 0;
  std::optional<RunTrace> trace;
  std::vector<Rational> round_cost;  // multiround only
};

SolutionFile ParseSolution(std::string_view text,
                           std::string_view source = "<input>");
std::string SerializeSolution(const SolutionFile& solution);

// Forced matchings and scripted greedy choices, 1-based:
//   {"phase1": [[a, b], ...], "phase2": [[p, q], ...],
//    "rounds": [[[a, b], ...], ...], "greedy": [[i, j, l, m], ...]}
// "phase1"/"phase2" are shorthands for rounds 1 and 2; phase-two entries
// index the phase-one pairs in their sorted order.
struct ForcedScript {
  std::vector<std::optional<std::vector<NodePair>>> rounds;
  std::vector<Quad> greedy_choices;

  // Policy for round r (0-based): forced if scripted, else `fallback`.
  TieBreakPolicy RoundPolicy(std::size_t r,
                             const TieBreakPolicy& fallback) const;
};

ForcedScript ParseForcedScript(std::string_view text,
                               std::string_view source = "<input>");

}  // namespace quadpart

#endif  // QUADPART_IO_H_
