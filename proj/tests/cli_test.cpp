// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"

namespace amenable::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path(const std::string& name) { return std::string(AMENABLE_SPEC_DIR) + "/" + name; }

TEST(CliTest, GroupOperations) {
  auto r = invoke({"group", "--group", "heisenberg", "--op", "multiply", "--x", "1,0,0", "--y", "0,1,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("result,(1,1,1)"), std::string::npos);
  r = invoke({"group", "--group", "heisenberg", "--op", "inverse", "--x", "1,2,3"});
  EXPECT_NE(r.out.find("result,(-1,-2,-1)"), std::string::npos);
  r = invoke({"group", "--group", "z2", "--op", "multiply", "--x", "1,2", "--y", "3,4", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out).at("result"), "(4,6)");
}

TEST(CliTest, EntropyTable) {
  const auto r = invoke({"entropy", "--sft", spec_path("golden_mean.spec"), "--n-max", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "n,cells,count,rate\n1,1,2,0.693147\n2,2,3,0.549306\n3,3,5,0.536479\n");
  const auto j = invoke({"entropy", "--sft", spec_path("golden_mean.spec"), "--n-max", "3",
                         "--format", "json"});
  const auto table = nlohmann::json::parse(j.out);
  ASSERT_EQ(table.size(), 3u);
  EXPECT_EQ(table[2].at("count"), "5");
}

TEST(CliTest, CoveringIsDeterministic) {
  const std::vector<std::string> args = {"covering", "--random", "--seed", "5", "--format", "json"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto record = nlohmann::json::parse(a.out);
  EXPECT_EQ(record.at("disjointness"), "verified");
  EXPECT_EQ(record.at("coverage_bound"), "met");
}

TEST(CliTest, EstimatorsAgree) {
  const auto bowen = invoke({"bowen", "--sft", spec_path("full_shift2.spec"), "--n-max", "10"});
  const auto dim = invoke({"dim", "--sft", spec_path("full_shift2.spec"), "--n-max", "10"});
  ASSERT_EQ(bowen.code, kExitOk) << bowen.err;
  ASSERT_EQ(dim.code, kExitOk) << dim.err;
  EXPECT_EQ(bowen.out, dim.out);
}

TEST(CliTest, ProofNumerics) {
  const auto r = invoke({"proofnum", "--n", "100", "--delta", "1/10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("100,1/10,10,19415908147835,"), std::string::npos);
  EXPECT_NE(r.out.find(",true"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"entropy", "--sft", "/nonexistent.spec"}).code, kExitUsage);
  EXPECT_EQ(invoke({"group", "--group", "z9", "--op", "inverse", "--x", "1"}).code, kExitUsage);
  const auto domain = invoke({"proofnum", "--n", "10", "--delta", "1/100"});
  EXPECT_EQ(domain.code, kExitDomain);
  EXPECT_NE(domain.err.find("domain error"), std::string::npos);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace amenable::cli
