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

// Drives the quadpart binary end to end. QUADPART_CLI is its path.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "quadpart/harness.h"
#include "quadpart/io.h"

namespace quadpart {
namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result Cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + " " + std::string(QUADPART_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        std::filesystem::temp_directory_path() /
        ("quadpart_cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveExactAndVerify) {
  const Result solve = Cli(
      "solve --input builtin:pq2_lb8 --algo exact --output " + Path("s.json"));
  ASSERT_EQ(solve.code, 0);
  const Result verify =
      Cli("verify --input builtin:pq2_lb8 --solution " + Path("s.json"));
  EXPECT_EQ(verify.code, 0);
  EXPECT_EQ(verify.out, "PASS cost 6\n");
}

TEST_F(CliTest, VerifyFailuresExitTwo) {
  Write("cover.json",
        R"({"quads": [[1, 2, 3, 4], [4, 5, 6, 7]], "claimed_cost": 6})");
  Result r =
      Cli("verify --input builtin:pq2_lb8 --solution " + Path("cover.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("cover violation"), std::string::npos);
  EXPECT_NE(r.out.find("group 2"), std::string::npos);

  ASSERT_EQ(Cli("solve --input builtin:pq2_lb8 --algo exact --output " +
                Path("s.json"))
                .code,
            0);
  SolutionFile s = ParseSolution(ReadFile(Path("s.json")));
  s.claimed_cost += 1;
  Write("cost.json", SerializeSolution(s));
  r = Cli("verify --input builtin:pq2_lb8 --solution " + Path("cost.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("cost mismatch"), std::string::npos);

  Write("range.json",
        R"({"quads": [[1, 2, 3, 4], [5, 6, 7, 9]], "claimed_cost": 6})");
  r = Cli("verify --input builtin:pq2_lb8 --solution " + Path("range.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("index out of range"), std::string::npos);
}

TEST_F(CliTest, SolveMatchWritesTrace) {
  const Result r =
      Cli("solve --input builtin:pq_lb8 --algo match --policy seed:3");
  ASSERT_EQ(r.code, 0);
  const SolutionFile s = ParseSolution(r.out);
  ASSERT_TRUE(s.trace.has_value());
  EXPECT_TRUE(s.trace->IdentityHolds());
  EXPECT_GE(s.claimed_cost, 4);
  EXPECT_LE(s.claimed_cost, 6);
}

TEST_F(CliTest, ForcedPolicyFromFile) {
  Write("forced.json", R"({"phase1": [[1, 3], [2, 4], [5, 6], [7, 8]]})");
  Result r = Cli("solve --input builtin:pq_lb8 --policy forced:" +
                 Path("forced.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ParseSolution(r.out).claimed_cost, 6);
  Write("bad.json", R"({"phase1": [[1, 2], [3, 4], [5, 7], [6, 8]]})");
  r = Cli("solve --input builtin:pq_lb8 --policy forced:" + Path("bad.json"));
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, GenIsDeterministicAndClassified) {
  ASSERT_EQ(Cli("gen --class TwoOnes --k 2 --size 5 --seed 3 --output " +
                Path("a.json"))
                .code,
            0);
  ASSERT_EQ(Cli("gen --class TwoOnes --k 2 --size 5 --seed 3 --output " +
                Path("b.json"))
                .code,
            0);
  EXPECT_EQ(ReadFile(Path("a.json")), ReadFile(Path("b.json")));
  EXPECT_EQ(Classify(LoadInstance(Path("a.json"))), InstanceClass::kTwoOnes);
  EXPECT_EQ(Cli("gen --class TwoOnesDistinctConnected --k 2 --size 40").code,
            1);
}

TEST_F(CliTest, InputErrorsExitOne) {
  EXPECT_EQ(Cli("solve --input /nonexistent.json").code, 1);
  EXPECT_EQ(Cli("solve --input builtin:pq_lb8 --policy nope").code, 1);
  EXPECT_EQ(Cli("solve --input builtin:pq_lb8 --algo nope").code, 1);
  EXPECT_EQ(Cli("frobnicate").code, 1);
  Write("neg.json", R"({"dim": 1, "vectors": [[1], [-1], [0], [0]]})");
  EXPECT_EQ(Cli("solve --input " + Path("neg.json")).code, 1);
}

TEST_F(CliTest, ResourceLimitsExitThree) {
  EXPECT_EQ(Cli("solve --input builtin:greedy_pq12 --algo exact",
                "QUADPART_NODE_BUDGET=0")
                .code,
            3);
  ASSERT_EQ(
      Cli("gen --class General --k 6 --size 3 --output " + Path("big.json"))
          .code,
      0);
  EXPECT_EQ(Cli("solve --input " + Path("big.json") + " --algo exact").code, 3);
  EXPECT_EQ(Cli("solve --input " + Path("big.json") + " --algo match").code, 0);
}

TEST_F(CliTest, ReproIsByteStable) {
  const Result a = Cli("repro");
  const Result b = Cli("repro");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("pq2dc_lb8,TwoOnesDistinctConnected,2,match,forced,10,8,"
                       "5/4,1.250000,no"),
            std::string::npos);
  const Result json = Cli("repro --format json");
  ASSERT_EQ(json.code, 0);
  EXPECT_NE(json.out.find("\"ratio\": \"13/10\""), std::string::npos);
}

TEST_F(CliTest, CompareCsvAndJson) {
  const Result csv =
      Cli("compare --class TwoOnesDistinctConnected --k 2 "
          "--samples 5 --format csv");
  ASSERT_EQ(csv.code, 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 1u + 5u * 7u);
  const Result json =
      Cli("compare --class TwoOnes --k 1-2 --samples 4 "
          "--output " +
          Path("r.json"));
  ASSERT_EQ(json.code, 0);
  EXPECT_NE(ReadFile(Path("r.json")).find("\"upper_bound\": \"4/3\""),
            std::string::npos);
}

}  // namespace
}  // namespace quadpart
