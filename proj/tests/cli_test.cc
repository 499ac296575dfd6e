// Copyright 2026 The mutfl Authors
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

#include <gtest/gtest.h>

#include <filesystem>

#include "cli_runner.h"
#include "json.hpp"
#include "mutfl/matrix_io.h"
#include "test_support.h"

namespace mutfl {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::DataPath;
using testing::RunCli;
using testing::Slurp;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mutfl_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  testing::CliResult Run(const std::string& args) { return RunCli(args, dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  const std::string worked_example_ = DataPath("worked_example.csv");
  fs::path dir_;
};

TEST_F(CliTest, LocalizePmPlusTopLine) {
  const auto r = Run("localize --matrix " + worked_example_ +
                     " --failing t1,t4 --model pm+ --scope f --out " + Tmp("r.csv"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "rank,method,score\n1,getType,5\n2,resolveType,4\n");
  EXPECT_EQ(Slurp(Tmp("r.csv")), r.out);
  const auto manifest = json::parse(Slurp(Tmp("r.csv.manifest.json")));
  EXPECT_EQ(manifest["subcommand"], "localize");
  EXPECT_EQ(manifest["config"]["epsilon"], 0.001);
  EXPECT_EQ(manifest["config"]["model"], "PM+(F)");
}

TEST_F(CliTest, LocalizeAllSixModels) {
  const std::string obs = " --observation " + DataPath("worked_example_observation.json");
  struct Case { const char* model; const char* scope; const char* first; };
  for (Case c : {Case{"pm+", "fp", "1,getType,11"}, Case{"pm*", "f", "1,getType,4.005"},
                 Case{"pm*", "fp", "1,getType,32.064"}, Case{"em", "f", "2,getType,1"},
                 Case{"em", "fp", "2,getType,1"}}) {
    const auto r = Run("localize --matrix " + worked_example_ + obs + " --model \"" + c.model +
                       "\" --scope " + c.scope);
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find(std::string("\n") + c.first + "\n"), std::string::npos)
        << c.model << c.scope << "\n" << r.out;
  }
}

TEST_F(CliTest, LocalizeJsonAndTopK) {
  const auto r = Run("localize --matrix " + worked_example_ +
                     " --failing t1,t4 --top-k 1 --out " + Tmp("r.json"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "rank,method,score\n1,getType,5\n");
  const auto doc = json::parse(Slurp(Tmp("r.json")));
  EXPECT_EQ(doc["ranking"].size(), 1u);
  EXPECT_EQ(doc["ranking"][0]["score"], 5.0);
  EXPECT_EQ(doc["manifest"]["tool"], "mutfl");
}

TEST_F(CliTest, LocalizeExactMatchWithoutPassingIsDomainError) {
  const auto r = Run("localize --matrix " + worked_example_ + " --failing t1,t4 --model em --scope fp");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("InvalidObservation"), std::string::npos);
}

TEST_F(CliTest, TrainThenLocalizeMlp) {
  const auto t1 = Run("train --matrix " + worked_example_ + " --kind mlp --scope fp --seed 3 --out " +
                      Tmp("a.json"));
  ASSERT_EQ(t1.status, 0) << t1.err;
  const auto t2 = Run("train --matrix " + worked_example_ + " --kind mlp --scope fp --seed 3 --out " +
                      Tmp("b.json"));
  ASSERT_EQ(t2.status, 0) << t2.err;
  EXPECT_EQ(Slurp(Tmp("a.json")), Slurp(Tmp("b.json")));
  const auto doc = json::parse(Slurp(Tmp("a.json")));
  EXPECT_EQ(doc["manifest"]["config"]["train"]["seed"], 3);

  const auto r = Run("localize --matrix " + worked_example_ +
                     " --failing t2,t4 --passing t1,t3 --model mlp --scope fp --model-file " +
                     Tmp("a.json") + " --out " + Tmp("p.json"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto ranking = json::parse(Slurp(Tmp("p.json")))["ranking"];
  double sum = 0;
  for (const auto& row : ranking) sum += row["score"].get<double>();
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST_F(CliTest, TrainFailingScopeAndLrOnTheFly) {
  const auto t = Run("train --matrix " + worked_example_ + " --kind lr --scope f --failing t1,t4 --out " +
                     Tmp("f.json"));
  ASSERT_EQ(t.status, 0) << t.err;
  const auto doc = json::parse(Slurp(Tmp("f.json")));
  EXPECT_EQ(doc["test_index"], json::array({"t1", "t4"}));
  const auto r = Run("localize --matrix " + worked_example_ +
                     " --failing t2,t4 --passing t1,t3 --model lr --scope fp");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("\n1,getType,"), std::string::npos) << r.out;
}

TEST_F(CliTest, TrainEmptyMatrixIsDomainError) {
  std::ofstream(Tmp("empty.csv")) << "mutant_id,method,operator,description,t:a\n";
  const auto r = Run("train --matrix " + Tmp("empty.csv") + " --kind lr --out " + Tmp("m.json"));
  EXPECT_EQ(r.status, 2);
}

TEST_F(CliTest, Sample) {
  auto r = Run("sample --matrix " + worked_example_ + " --rate 1.0 --out " + Tmp("s.csv"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(Slurp(Tmp("s.csv")), Slurp(worked_example_));
  r = Run("sample --matrix " + worked_example_ + " --per-method 2 --seed 4 --out " + Tmp("p.csv"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(LoadMatrix(Tmp("p.csv")).num_mutants(), 4u);
  const auto manifest = json::parse(Slurp(Tmp("p.csv.manifest.json")));
  EXPECT_EQ(manifest["config"]["plan"]["seed"], 4);
  r = Run("sample --matrix " + worked_example_ + " --per-method 2 --seed 4 --out " + Tmp("q.csv"));
  EXPECT_EQ(Slurp(Tmp("q.csv")), Slurp(Tmp("p.csv")));
  r = Run("sample --matrix " + worked_example_ + " --rate 1.5 --out " + Tmp("x.csv"));
  EXPECT_EQ(r.status, 1);
  r = Run("sample --matrix " + worked_example_ + " --rate 0.5 --per-method 2 --out " + Tmp("x.csv"));
  EXPECT_EQ(r.status, 1);
  r = Run("sample --matrix " + worked_example_ + " --out " + Tmp("x.csv"));
  EXPECT_EQ(r.status, 1);
}

TEST_F(CliTest, EvaluateWorkedExample) {
  const auto r = Run("evaluate --matrix " + worked_example_ + " --model pm+ --scope f --out " +
                     Tmp("e.json"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = json::parse(Slurp(Tmp("e.json")));
  EXPECT_EQ(doc["faults"].size(), 7u);
  EXPECT_LE(doc["acc"]["1"], doc["acc"]["3"]);
  EXPECT_LE(doc["acc"]["3"], doc["acc"]["5"]);
  EXPECT_LE(doc["acc"]["5"], doc["acc"]["10"]);
  EXPECT_NE(r.out.find("PM+(F)"), std::string::npos);
  const auto again = Run("evaluate --matrix " + worked_example_ + " --model pm+ --scope f --out " +
                         Tmp("e2.json"));
  EXPECT_EQ(Slurp(Tmp("e2.json")), Slurp(Tmp("e.json")));
  EXPECT_EQ(again.out, r.out);
}

TEST_F(CliTest, AnalyzeDemoAndJobsIndependence) {
  const std::string base = "analyze --program " + DataPath("demo/demo.toy") + " --tests " +
                           DataPath("demo/demo.toytest");
  auto r = Run(base + " --out " + Tmp("d1.csv") + " --jobs 1");
  ASSERT_EQ(r.status, 0) << r.err;
  r = Run(base + " --out " + Tmp("d3.csv") + " --jobs 3");
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string golden = Slurp(DataPath("demo/demo_matrix.csv"));
  EXPECT_EQ(Slurp(Tmp("d1.csv")), golden);
  EXPECT_EQ(Slurp(Tmp("d3.csv")), golden);
  r = Run(base + " --ops AOR --out " + Tmp("aor.json"));
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = json::parse(Slurp(Tmp("aor.json")));
  for (const auto& m : doc["mutants"]) EXPECT_EQ(m["operator"], "AOR");
  EXPECT_EQ(doc["manifest"]["config"]["ops"], json::array({"AOR"}));
}

TEST_F(CliTest, AnalyzeFailingBaseline) {
  std::ofstream(Tmp("p.toy")) << "fn add(a,b){ return a + b; }\n";
  std::ofstream(Tmp("p.toytest")) << "test ok { assert add(1,1) == 2; }\n"
                                  << "test wrong_sum { assert add(1,1) == 3; }\n";
  const auto r = Run("analyze --program " + Tmp("p.toy") + " --tests " + Tmp("p.toytest") +
                     " --out " + Tmp("m.csv"));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("wrong_sum"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  auto r = Run("analyze --bogus");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE((r.out + r.err).find("--program"), std::string::npos);
  r = Run("");
  EXPECT_EQ(r.status, 1);
  r = Run("localize --matrix /nonexistent.csv --failing t1");
  EXPECT_EQ(r.status, 1);
  std::ofstream(Tmp("bad.toy")) << "fn f( {";
  r = Run("analyze --program " + Tmp("bad.toy") + " --tests " + Tmp("bad.toy") + " --out " +
          Tmp("m.csv"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
  r = Run("--help");
  EXPECT_EQ(r.status, 0);
}

}  // namespace
}  // namespace mutfl
