// Copyright 2026 The oppflags Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/cli.hpp"

namespace oppflags::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result invoke(std::vector<std::string> args) {
  args.push_back("--no-cache");
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const nlohmann::json& check(const nlohmann::json& report, const std::string& name) {
  for (const auto& c : report.at("checks")) {
    if (c.at("name") == name) return c;
  }
  static const nlohmann::json missing;
  ADD_FAILURE() << "no check " << name;
  return missing;
}

TEST(Cli, QuotientReport) {
  const auto r = invoke({"quotient", "A:3:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("instance"), "A:3:2");
  EXPECT_EQ(j.at("suite"), "quotient");
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_EQ(j.at("data").at("quotient_empirical"),
            nlohmann::json::parse("[[0,0,0,64],[0,0,32,32],[0,16,16,32],[8,8,16,32]]"));
  for (const auto& c : j.at("checks")) {
    EXPECT_EQ(c.at("status"), "pass") << c.dump();
    EXPECT_TRUE(c.at("provenance") == "paper" || c.at("provenance") == "derived" || c.at("provenance") == "trivial");
  }
}

TEST(Cli, MultiplicityArbitrationExitsTwo) {
  const auto r = invoke({"multiplicity", "B:2:2:2:sp", "--empirical"});
  EXPECT_EQ(r.code, 2);
  const auto j = r.json();
  EXPECT_EQ(j.at("data").at("theorem"), 18);
  EXPECT_EQ(j.at("data").at("table").at("value"), 36);
  EXPECT_EQ(j.at("data").at("empirical"), 18);
  EXPECT_EQ(j.at("data").at("matching"), "closed");
  EXPECT_EQ(check(j, "theorem_vs_empirical").at("status"), "pass");
  EXPECT_EQ(check(j, "table_vs_empirical").at("status"), "fail");
}

TEST(Cli, MultiplicityWithoutEmpiricalSkips) {
  const auto r = invoke({"multiplicity", "B:2:2:2:sp"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(check(r.json(), "theorem_vs_empirical").at("status"), "skipped");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({"frobnicate", "A:3:2"}).code, 1);
  EXPECT_EQ(invoke({"quotient"}).code, 1);
  EXPECT_EQ(invoke({"quotient", "A:3:6"}).code, 1);
  EXPECT_EQ(invoke({"quotient", "A:3:2", "--format", "xml"}).code, 1);
  EXPECT_EQ(invoke({"quotient", "D:4:2"}).code, 1);
  const auto bad = invoke({"enumerate", "B:2:1:2:herm"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("NonSquareFieldForHalfIntegerE"), std::string::npos) << bad.err;
}

TEST(Cli, HelpExitsZero) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run({"--help"}, out, err), 0);
  EXPECT_NE(out.str().find("report-all"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  const auto a = invoke({"report-all", "B:2:1:4:herm", "--seed", "3", "--jobs", "1"});
  const auto b = invoke({"report-all", "B:2:1:4:herm", "--seed", "3", "--jobs", "3"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = a.json();
  EXPECT_EQ(j.at("suite"), "report-all");
  EXPECT_EQ(check(j, "multiplicity/theorem_vs_empirical").at("actual"), 40);
}

TEST(Cli, SampledRunsAreDeterministic) {
  const auto a = invoke({"eigvec", "B:3:2:2:sp", "--sample", "25", "--seed", "9"});
  const auto b = invoke({"eigvec", "B:3:2:2:sp", "--sample", "25", "--seed", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json().at("seed"), 9);
}

TEST(Cli, CsvAndOutFile) {
  const auto path =
      std::filesystem::temp_directory_path() / ("oppflags-cli-" + std::to_string(std::random_device{}()) + ".csv");
  const auto r = invoke({"enumerate", "B:2:2:2:sp", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "instance,suite,seed,tool_version,name,status,expected,actual,provenance,anchor,detail");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_EQ(line.rfind("B:2:2:2:sp,enumerate,0,", 0), 0u) << line;
    ++lines;
  }
  const auto json = invoke({"enumerate", "B:2:2:2:sp"}).json();
  EXPECT_EQ(lines, json.at("checks").size());
  std::filesystem::remove(path);
}

TEST(Cli, TimingIsOptIn) {
  const auto r = invoke({"enumerate", "A:3:2", "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.json().at("timing").contains("enumerate"));
}

// F'_1 vanishes identically on D_4(2); the report keeps that failure visible.
TEST(Cli, OriflammeEigvecReport) {
  const auto r = invoke({"eigvec", "D:4:2", "--sample", "50", "--seed", "7"});
  EXPECT_EQ(r.code, 2);
  const auto j = r.json();
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(check(j, "lifted_j" + std::to_string(k)).at("status"), "pass");
    EXPECT_EQ(check(j, "component_lifted_j" + std::to_string(k)).at("status"), "pass");
  }
  EXPECT_EQ(check(j, "nonzero_j1").at("status"), "fail");
  EXPECT_EQ(check(j, "nonzero_j2").at("status"), "pass");
}

}  // namespace
}  // namespace oppflags::cli
