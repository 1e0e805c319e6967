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

#include "quadpart/io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "quadpart/errors.h"

namespace quadpart {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(std::string_view source, const std::string& where,
                       const std::string& what) {
  throw InputError(std::string(source) + ": " + where + ": " + what);
}

json ParseJson(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string(source) + ": malformed JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

const json& Member(const json& obj, const char* key, std::string_view source) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(source, "top level", std::string("missing \"") + key + "\"");
  }
  return obj.at(key);
}

std::size_t PositiveInt(const json& j, std::string_view source,
                        const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    Fail(source, where, "expected a positive integer");
  }
  return j.get<std::size_t>();
}

Rational Component(const json& j, std::string_view source,
                   const std::string& where) {
  Rational r;
  if (j.is_number_integer()) {
    r = Rational(BigInt(j.get<std::int64_t>()));
  } else if (j.is_string()) {
    try {
      r = ParseRational(j.get<std::string>());
    } catch (const InputError& e) {
      Fail(source, where, e.what());
    }
  } else {
    Fail(source, where, "expected an integer or a \"p/q\" string");
  }
  if (r < 0) Fail(source, where, "negative component " + FormatRational(r));
  return r;
}

std::string ComponentText(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return FormatRational(r);
  return "\"" + FormatRational(r) + "\"";
}

std::string JoinRow(const std::vector<std::string>& cells) {
  std::string out = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += cells[i];
  }
  return out + "]";
}

// Index lists like [[1, 2], [3, 4]] to 0-based vectors.
std::vector<std::vector<std::size_t>> IndexRows(const json& j,
                                                std::string_view source,
                                                const std::string& where,
                                                std::size_t width) {
  if (!j.is_array()) Fail(source, where, "expected an array");
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || (width && j[r].size() != width)) {
      Fail(source, at,
           "expected an array of " + std::to_string(width) + " indices");
    }
    std::vector<std::size_t> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      row.push_back(
          PositiveInt(j[r][c], source, at + "[" + std::to_string(c) + "]") - 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<NodePair> PairRows(const json& j, std::string_view source,
                               const std::string& where) {
  std::vector<NodePair> pairs;
  for (const auto& row : IndexRows(j, source, where, 2)) {
    pairs.push_back(NodePair::Of(row[0], row[1]));
  }
  return pairs;
}

std::string TraceJson(const RunTrace& t, const std::string& indent) {
  std::ostringstream out;
  out << "{\n"
      << indent << "  \"cost_m\": \"" << FormatRational(t.cost_m) << "\",\n"
      << indent << "  \"weight_m_prime\": \""
      << FormatRational(t.weight_m_prime) << "\",\n"
      << indent << "  \"result_cost\": \"" << FormatRational(t.result_cost)
      << "\",\n"
      << indent
      << "  \"identity_holds\": " << (t.IdentityHolds() ? "true" : "false")
      << "\n"
      << indent << "}";
  return out.str();
}

}  // namespace

Instance ParseInstance(std::string_view text, std::string_view source) {
  const json doc = ParseJson(text, source);
  const std::size_t dim =
      PositiveInt(Member(doc, "dim", source), source, "dim");
  const json& rows = Member(doc, "vectors", source);
  if (!rows.is_array()) Fail(source, "vectors", "expected an array");
  if (rows.empty() || rows.size() % 4 != 0) {
    Fail(source, "vectors",
         "count " + std::to_string(rows.size()) +
             " is not a positive multiple of 4");
  }
  std::vector<DenseVector> vectors;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = "vectors[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != dim) {
      Fail(source, at,
           "has " + std::to_string(rows[i].is_array() ? rows[i].size() : 0) +
               " components, expected dim " + std::to_string(dim));
    }
    std::vector<Rational> comps;
    for (std::size_t c = 0; c < dim; ++c) {
      comps.push_back(
          Component(rows[i][c], source, at + "[" + std::to_string(c) + "]"));
    }
    vectors.emplace_back(std::move(comps));
  }
  std::string name;
  if (doc.contains("name") && doc["name"].is_string()) {
    name = doc["name"].get<std::string>();
  }
  return Instance(std::move(vectors), std::move(name));
}

std::string SerializeInstance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n";
  if (!instance.name().empty()) {
    out << "  \"name\": " << json(instance.name()).dump() << ",\n";
  }
  out << "  \"dim\": " << instance.dim() << ",\n  \"vectors\": [\n";
  for (std::size_t i = 0; i < instance.size(); ++i) {
    std::vector<std::string> cells;
    for (const Rational& r : instance.vectors()[i].components()) {
      cells.push_back(ComponentText(r));
    }
    out << "    " << JoinRow(cells) << (i + 1 < instance.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

GraphView ParseGraph(std::string_view text, std::string_view source) {
  const json doc = ParseJson(text, source);
  GraphView g;
  g.node_count = PositiveInt(Member(doc, "nodes", source), source, "nodes");
  for (const auto& row :
       IndexRows(Member(doc, "edges", source), source, "edges", 2)) {
    g.edges.push_back({row[0] + 1, row[1] + 1});
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (g.edges[i].u > g.node_count || g.edges[i].v > g.node_count) {
      Fail(source, "edges[" + std::to_string(i) + "]",
           "label exceeds nodes = " + std::to_string(g.node_count));
    }
  }
  return g;
}

std::string SerializeGraph(const GraphView& graph) {
  std::ostringstream out;
  out << "{\n  \"nodes\": " << graph.node_count << ",\n  \"edges\": [";
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    out << (i ? ", " : "") << "[" << graph.edges[i].u << ", "
        << graph.edges[i].v << "]";
  }
  out << "]\n}\n";
  return out.str();
}

Instance ParseInstanceOrGraph(std::string_view text, std::string_view source) {
  const json doc = ParseJson(text, source);
  if (doc.is_object() && doc.contains("edges")) {
    const GraphView g = ParseGraph(text, source);
    if (g.edges.empty() || g.edges.size() % 4 != 0) {
      Fail(source, "edges",
           "count " + std::to_string(g.edges.size()) +
               " is not a positive multiple of 4");
    }
    return FromGraph(g, std::string(source));
  }
  return ParseInstance(text, source);
}

Instance LoadInstance(std::string_view ref) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (ref.starts_with(kBuiltin))
    return BuiltinInstance(ref.substr(kBuiltin.size()));
  return ParseInstanceOrGraph(ReadFile(std::filesystem::path(ref)), ref);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

SolutionFile ParseSolution(std::string_view text, std::string_view source) {
  const json doc = ParseJson(text, source);
  SolutionFile s;
  if (doc.contains("instance") && doc["instance"].is_string()) {
    s.instance = doc["instance"].get<std::string>();
  }
  if (doc.contains("algorithm") && doc["algorithm"].is_string()) {
    s.algorithm = doc["algorithm"].get<std::string>();
  }
  if (doc.contains("group_size")) {
    s.group_size = PositiveInt(doc["group_size"], source, "group_size");
  }
  const json& quads = Member(doc, "quads", source);
  if (!quads.is_array()) Fail(source, "quads", "expected an array");
  for (std::size_t g = 0; g < quads.size(); ++g) {
    const std::string at = "quads[" + std::to_string(g) + "]";
    if (!quads[g].is_array()) Fail(source, at, "expected an array");
    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < quads[g].size(); ++c) {
      const json& x = quads[g][c];
      if (!x.is_number_integer()) {
        Fail(source, at + "[" + std::to_string(c) + "]",
             "expected an integer index");
      }
      const std::int64_t label = x.get<std::int64_t>();
      members.push_back(label < 1 ? kInvalidIndex
                                  : static_cast<std::size_t>(label - 1));
    }
    s.groups.push_back(std::move(members));
  }
  const json& claimed = Member(doc, "claimed_cost", source);
  s.claimed_cost = Component(claimed, source, "claimed_cost");
  if (doc.contains("trace")) {
    const json& t = doc["trace"];
    RunTrace trace;
    trace.cost_m =
        Component(Member(t, "cost_m", source), source, "trace.cost_m");
    trace.weight_m_prime = Component(Member(t, "weight_m_prime", source),
                                     source, "trace.weight_m_prime");
    trace.result_cost = Component(Member(t, "result_cost", source), source,
                                  "trace.result_cost");
    s.trace = trace;
  }
  if (doc.contains("round_cost")) {
    const json& r = doc["round_cost"];
    if (!r.is_array()) Fail(source, "round_cost", "expected an array");
    for (std::size_t i = 0; i < r.size(); ++i) {
      s.round_cost.push_back(
          Component(r[i], source, "round_cost[" + std::to_string(i) + "]"));
    }
  }
  return s;
}

std::string SerializeSolution(const SolutionFile& s) {
  std::ostringstream out;
  out << "{\n  \"instance\": " << json(s.instance).dump() << ",\n"
      << "  \"algorithm\": " << json(s.algorithm).dump() << ",\n"
      << "  \"group_size\": " << s.group_size << ",\n  \"quads\": [\n";
  for (std::size_t g = 0; g < s.groups.size(); ++g) {
    std::vector<std::string> cells;
    for (std::size_t i : s.groups[g]) cells.push_back(std::to_string(i + 1));
    out << "    " << JoinRow(cells) << (g + 1 < s.groups.size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"claimed_cost\": \"" << FormatRational(s.claimed_cost)
      << "\"";
  if (s.trace) out << ",\n  \"trace\": " << TraceJson(*s.trace, "  ");
  if (!s.round_cost.empty()) {
    std::vector<std::string> cells;
    for (const Rational& r : s.round_cost) {
      cells.push_back("\"" + FormatRational(r) + "\"");
    }
    out << ",\n  \"round_cost\": " << JoinRow(cells);
  }
  out << "\n}\n";
  return out.str();
}

TieBreakPolicy ForcedScript::RoundPolicy(std::size_t r,
                                         const TieBreakPolicy& fallback) const {
  if (r < rounds.size() && rounds[r]) return TieBreakPolicy::Forced(*rounds[r]);
  return fallback;
}

ForcedScript ParseForcedScript(std::string_view text, std::string_view source) {
  const json doc = ParseJson(text, source);
  if (!doc.is_object()) Fail(source, "top level", "expected an object");
  ForcedScript script;
  auto set_round = [&](std::size_t r, std::vector<NodePair> pairs) {
    if (script.rounds.size() <= r) script.rounds.resize(r + 1);
    script.rounds[r] = std::move(pairs);
  };
  if (doc.contains("rounds")) {
    const json& rounds = doc["rounds"];
    if (!rounds.is_array()) Fail(source, "rounds", "expected an array");
    for (std::size_t r = 0; r < rounds.size(); ++r) {
      if (rounds[r].is_null()) continue;
      set_round(
          r, PairRows(rounds[r], source, "rounds[" + std::to_string(r) + "]"));
    }
  }
  if (doc.contains("phase1"))
    set_round(0, PairRows(doc["phase1"], source, "phase1"));
  if (doc.contains("phase2"))
    set_round(1, PairRows(doc["phase2"], source, "phase2"));
  if (doc.contains("greedy")) {
    for (const auto& row : IndexRows(doc["greedy"], source, "greedy", 4)) {
      script.greedy_choices.push_back({row[0], row[1], row[2], row[3]});
    }
  }
  return script;
}

}  // namespace quadpart
