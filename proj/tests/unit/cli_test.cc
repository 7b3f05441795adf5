// Copyright 2026 The greennet Authors
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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "greennet/generators.h"
#include "greennet/instance_io.h"
#include "greennet/lp_format.h"
#include "test_util.h"

namespace greennet::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "greennet");
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string WriteInstance(const NetworkInstance& inst, const std::string& stem) {
  const std::string path = testing::TempPath(stem + ".gni.json");
  WriteTextFile(path, SerializeInstance(inst));
  return path;
}

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve"}).code, kExitUsage);
  const std::string path = WriteInstance(CanonicalInstance(), "usage");
  EXPECT_EQ(Cli({"solve", path, "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", path, "--model", "original"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", path, "--threads", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", path + ".missing"}).code, kExitUsage);
}

TEST(Cli, GenNeedsSeedForRandomness) {
  EXPECT_EQ(Cli({"gen", "--shape", "random", "--routers", "4"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"gen", "--routers", "3", "--random-demands", "2"}).code,
            kExitUsage);
  const CliRun a = Cli({"gen", "--shape", "random", "--routers", "4", "--seed", "7",
                     "--random-demands", "2"});
  const CliRun b = Cli({"gen", "--shape", "random", "--routers", "4", "--seed", "7",
                     "--random-demands", "2"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(ParseInstance(a.out).report.ok());
}

TEST(Cli, GenLineMatchesLibrary) {
  const std::string path = testing::TempPath("gen.gni.json");
  const CliRun run = Cli({"gen", "--routers", "2", "--demand", "0:1:1", "-o", path});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(ParseValidInstance(ReadTextFile(path)), CanonicalInstance());
  EXPECT_EQ(Cli({"gen", "--demand", "0:1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"gen", "--demand", "0:0:1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"gen", "--routers", "1"}).code, kExitUsage);
}

TEST(Cli, GenCustomStates) {
  const CliRun run = Cli({"gen", "--routers", "3", "--state", "2:4", "--state",
                       "3:8", "--state", "9:20", "--card-power", "1.5"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const NetworkInstance inst = ParseValidInstance(run.out);
  EXPECT_EQ(inst.num_states, 3);
  EXPECT_EQ(inst.state_capacity(2, 2), 20.0);
  EXPECT_EQ(inst.card_power[0], 1.5);
}

TEST(Cli, SolveThenValidate) {
  const std::string path = WriteInstance(CanonicalInstance(), "solve");
  const CliRun solve = Cli({"solve", path});
  ASSERT_EQ(solve.code, kExitOk) << solve.err;
  EXPECT_NE(solve.out.find("status: optimal"), std::string::npos);
  EXPECT_NE(solve.out.find("objective: 12"), std::string::npos);
  EXPECT_NE(solve.out.find("R0 -e0-> R1"), std::string::npos);
  std::string sol_path = path;
  sol_path.replace(sol_path.size() - 9, 9, ".sol.json");
  ASSERT_TRUE(std::filesystem::exists(sol_path));
  const CliRun validate = Cli({"validate", path, sol_path});
  EXPECT_EQ(validate.code, kExitOk) << validate.out;
  EXPECT_NE(validate.out.find("feasible: yes"), std::string::npos);
}

TEST(Cli, LegacySolutionFailsCorrectedValidation) {
  const std::string path = WriteInstance(CanonicalInstance(), "legacy");
  const std::string sol = testing::TempPath("legacy.sol.json");
  ASSERT_EQ(Cli({"solve", path, "--model", "legacy", "-o", sol}).code, kExitOk);
  EXPECT_EQ(Cli({"validate", path, sol}).code, kExitOk);
  const CliRun run = Cli({"validate", path, sol, "--model", "corrected",
                       "--format", "json"});
  EXPECT_EQ(run.code, kExitMismatch);
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["is_feasible"], false);
  EXPECT_EQ(doc["families"]["port_symmetry"].size(), 2u);
}

TEST(Cli, ValidateRejectsMismatchedSolution) {
  const std::string small = WriteInstance(CanonicalInstance(), "small");
  const std::string big = WriteInstance(GenerateLine(3, {{0, 2, 1.0}}), "big");
  const std::string sol = testing::TempPath("small.sol.json");
  ASSERT_EQ(Cli({"solve", small, "-o", sol}).code, kExitOk);
  EXPECT_EQ(Cli({"validate", big, sol}).code, kExitUsage);
}

TEST(Cli, SolveInfeasible) {
  const std::string path = WriteInstance(GenerateLine(2, {{0, 1, 20.0}}), "inf");
  const CliRun run = Cli({"solve", path, "--format", "json"});
  EXPECT_EQ(run.code, kExitMismatch);
  const auto doc = nlohmann::json::parse(run.out);
  EXPECT_EQ(doc["status"], "infeasible");
  EXPECT_TRUE(doc["objective"].is_null());
}

TEST(Cli, SolveJsonAndThreads) {
  const std::string path =
      WriteInstance(GenerateRing(4, {{0, 2, 2.0}, {3, 1, 1.0}}), "ring");
  const CliRun one = Cli({"solve", path, "--format", "json"});
  const CliRun four = Cli({"solve", path, "--format", "json", "--threads", "4"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.out, four.out);
  const auto doc = nlohmann::json::parse(one.out);
  EXPECT_EQ(doc["schema_version"], "greennet-1");
  EXPECT_EQ(doc["paths"].size(), 2u);
}

TEST(Cli, CompareWitnesses) {
  const std::string transit =
      WriteInstance(GenerateLine(3, {{0, 2, 1.0}}), "transit");
  const CliRun a = Cli({"compare", transit});
  EXPECT_EQ(a.code, kExitMismatch);
  EXPECT_NE(a.out.find("infeasible"), std::string::npos);
  EXPECT_NE(a.out.find("optimal"), std::string::npos);

  const CliRun b = Cli({"compare", WriteInstance(CanonicalInstance(), "single"),
                     "--format", "json"});
  EXPECT_EQ(b.code, kExitMismatch);
  const auto doc = nlohmann::json::parse(b.out);
  EXPECT_EQ(doc["models"]["corrected"]["objective"], 12.0);
  EXPECT_EQ(doc["models"]["legacy"]["objective"], 11.0);
  EXPECT_EQ(doc["edge_pairs"][0]["corrected_rows_match"], true);
  EXPECT_EQ(doc["edge_pairs"][0]["legacy_rows_match"], false);

  const CliRun c = Cli({"compare", WriteInstance(GenerateLine(3), "empty")});
  EXPECT_EQ(c.code, kExitOk) << c.out;
  EXPECT_NE(c.out.find("models agree"), std::string::npos);
}

TEST(Cli, ExportLp) {
  const std::string path = WriteInstance(CanonicalInstance(), "export");
  const std::string lp = testing::TempPath("export.lp");
  const CliRun run = Cli({"export-lp", path, lp, "--model", "legacy"});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const MilpModel model = ReadLp(ReadTextFile(lp));
  EXPECT_EQ(model.num_variables(), 10);
  EXPECT_NE(ReadTextFile(lp).find("\\ model: legacy"), std::string::npos);
}

TEST(Cli, LogLevelFromEnvironment) {
  const std::string path = WriteInstance(CanonicalInstance(), "log");
  ::setenv("GREENNET_LOG", "info", 1);
  const CliRun loud = Cli({"solve", path});
  ::setenv("GREENNET_LOG", "nonsense", 1);
  const CliRun odd = Cli({"solve", path});
  ::unsetenv("GREENNET_LOG");
  const CliRun quiet = Cli({"solve", path});
  EXPECT_NE(loud.err.find("[info]"), std::string::npos);
  EXPECT_NE(odd.err.find("GREENNET_LOG"), std::string::npos);
  EXPECT_TRUE(quiet.err.empty()) << quiet.err;
}

}  // namespace
}  // namespace greennet::cli
