// Copyright 2026 The biocoref Authors.
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

#include "biocoref/batch.h"

#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "biocoref/errors.h"
#include "synthetic.h"
#include "test_support.h"

namespace biocoref {
namespace {

namespace fs = std::filesystem;
using testing::Fixture;
using testing::ReadText;
using testing::Res;
using testing::SourcePath;

class BatchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("biocoref_batch_" + std::to_string(getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunConfig FixtureConfig(const std::string &out) const {
    RunConfig c;
    c.inputs = {SourcePath("fixtures/*_*.json")};
    c.out_dir = (dir_ / out).string();
    return c;
  }

  std::map<std::string, std::string> ReadDir(const fs::path &dir) const {
    std::map<std::string, std::string> out;
    for (const auto &e : fs::directory_iterator(dir)) {
      out[e.path().filename().string()] = ReadText(e.path().string());
    }
    return out;
  }

  fs::path dir_;
};

TEST_F(BatchTest, FixtureCorpusSummaryMatchesManifest) {
  nlohmann::json totals = testing::LoadManifest()["totals"];
  std::ostringstream log;
  RunResult r = RunResolve(FixtureConfig("out"), log);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.summary.docs, totals["docs"].get<int>());
  EXPECT_EQ(r.summary.failed, 0);
  EXPECT_EQ(r.summary.detected, totals["anaphors_detected"].get<int>());
  EXPECT_EQ(r.summary.resolved, totals["resolved"].get<int>());
  EXPECT_EQ(r.summary.unresolved, totals["unresolved"].get<int>());
  EXPECT_EQ(r.summary.detected, r.summary.resolved + r.summary.unresolved);
  EXPECT_EQ(r.summary.events_emitted, totals["combined_events"].get<int>());
  EXPECT_EQ(ReadDir(dir_ / "out").size(), 22u);
  int per_sieve = 0;
  for (const auto &[name, n] : r.summary.resolved_per_sieve) per_sieve += n;
  EXPECT_EQ(per_sieve, r.summary.resolved);

  // One JSON line per document plus the summary line.
  std::istringstream lines(log.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    nlohmann::json j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("level"));
    ++count;
  }
  EXPECT_EQ(count, 23);
}

TEST_F(BatchTest, AblationDisablesPronominal) {
  RunConfig c = FixtureConfig("out");
  c.inputs = {SourcePath("fixtures/ex12_foxp3.json")};
  c.disabled_sieves = {"pronominal"};
  std::ostringstream log;
  RunResult r = RunResolve(c, log);
  EXPECT_EQ(r.summary.resolved, 0);
  EXPECT_EQ(r.summary.events_emitted, 0);
  EXPECT_EQ(r.summary.events_dropped, 1);
}

TEST_F(BatchTest, EmptyGlobIsSuccess) {
  RunConfig c = FixtureConfig("out");
  c.inputs = {(dir_ / "nothing" / "*.json").string()};
  std::ostringstream log;
  RunResult r = RunResolve(c, log);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.summary.docs, 0);
  EXPECT_NE(log.str().find("\"docs\":0"), std::string::npos);
}

TEST_F(BatchTest, MissingConfigFailsBeforeProcessing) {
  RunConfig c = FixtureConfig("out");
  c.schema = (dir_ / "missing.json").string();
  std::ostringstream log;
  try {
    RunResolve(c, log);
    FAIL();
  } catch (const CorefError &e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
  }
  EXPECT_FALSE(fs::exists(dir_ / "out"));
}

TEST_F(BatchTest, BadDocumentIsIsolated) {
  fs::create_directories(dir_ / "in");
  fs::copy(SourcePath("fixtures/ex12_foxp3.json"), dir_ / "in" / "a.json");
  std::ofstream(dir_ / "in" / "b.json") << "{not json";
  fs::copy(SourcePath("fixtures/ex13_rb.json"), dir_ / "in" / "c.json");
  RunConfig c;
  c.inputs = {(dir_ / "in" / "*.json").string()};
  c.out_dir = (dir_ / "out").string();
  std::ostringstream log;
  RunResult r = RunResolve(c, log);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.summary.failed, 1);
  ASSERT_EQ(r.summary.failures.size(), 1u);
  EXPECT_NE(r.summary.failures[0].input.find("b.json"), std::string::npos);
  EXPECT_EQ(ReadDir(dir_ / "out").size(), 2u);

  c.strict = true;
  c.out_dir = (dir_ / "strict").string();
  RunResult s = RunResolve(c, log);
  EXPECT_EQ(s.exit_code, 1);
  EXPECT_EQ(ReadDir(dir_ / "strict").size(), 1u);
}

TEST_F(BatchTest, ParallelismDoesNotChangeOutput) {
  testing::SyntheticCorpus corpus(Res().dict, Res().schema);
  fs::create_directories(dir_ / "in");
  for (int i = 0; i < 120; ++i) {
    std::ofstream(dir_ / "in" / ("doc" + std::to_string(i) + ".json"))
        << SaveDocument(corpus.Generate(1000 + i, "doc" + std::to_string(i)));
  }
  RunConfig c;
  c.inputs = {(dir_ / "in" / "*.json").string()};
  c.emit_provenance = true;
  std::ostringstream log1, log8;
  c.out_dir = (dir_ / "j1").string();
  c.jobs = 1;
  RunResult one = RunResolve(c, log1);
  c.out_dir = (dir_ / "j8").string();
  c.jobs = 8;
  RunResult eight = RunResolve(c, log8);
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_EQ(ReadDir(dir_ / "j1"), ReadDir(dir_ / "j8"));
  EXPECT_EQ(SummaryJson(one.summary), SummaryJson(eight.summary));
  EXPECT_EQ(log1.str(), log8.str());
}

TEST_F(BatchTest, InputOrderDoesNotChangeResults) {
  testing::SyntheticCorpus corpus(Res().dict, Res().schema);
  std::vector<Document> docs;
  for (int i = 0; i < 50; ++i) docs.push_back(corpus.Generate(i, "d" + std::to_string(i)));
  std::vector<Document> reversed(docs.rbegin(), docs.rend());
  ResolverConfig config = Res().Config();
  auto forward = ProcessAll(docs, config, 4);
  auto backward = ProcessAll(reversed, config, 3);
  std::reverse(backward.begin(), backward.end());
  EXPECT_EQ(forward, backward);
}

TEST(InspectTest, ChainExclusionThenAcceptance) {
  ResultDocument r = testing::Run(Fixture("ex01_gsk3b_axin"), {}, true);
  const std::string out = InspectAnaphor(r, "T3");
  EXPECT_NE(out.find("T1 \"GSK3β\": excluded (chain-with-participant)"),
            std::string::npos)
      << out;
  EXPECT_NE(out.find("T2 \"Axin GBD\": accepted"), std::string::npos) << out;
  EXPECT_NE(out.find("LINKED T2 \"Axin GBD\" via pronominal"), std::string::npos);
}

TEST(InspectTest, PluralListsBothInTextOrder) {
  ResultDocument r = testing::Run(Fixture("ex16_cul4a"), {}, true);
  const std::string out = InspectAnaphor(r, "T3");
  const auto baf = out.find("T1 \"BAF\": accepted");
  const auto emerin = out.find("T2 \"emerin\": accepted");
  ASSERT_NE(baf, std::string::npos) << out;
  ASSERT_NE(emerin, std::string::npos) << out;
  EXPECT_LT(baf, emerin);
}

TEST(InspectTest, TerminalLineDiffers) {
  ResultDocument linked = testing::Run(Fixture("ex12_foxp3"), {}, true);
  ResultDocument dropped = testing::Run(Fixture("neg_expletive"), {}, true);
  auto last = [](const std::string &s) {
    std::string t = s.substr(0, s.size() - 1);
    return t.substr(t.rfind('\n') + 1);
  };
  EXPECT_EQ(last(InspectAnaphor(linked, "T2")).rfind("LINKED", 0), 0u);
  EXPECT_EQ(last(InspectAnaphor(dropped, "T1")).rfind("DROPPED", 0), 0u);
}

TEST(InspectTest, Errors) {
  ResultDocument r = testing::Run(Fixture("ex12_foxp3"), {}, true);
  try {
    InspectAnaphor(r, "T1");
    FAIL();
  } catch (const CorefError &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownAnaphor);
  }
  r.has_trace = false;
  EXPECT_THROW(InspectAnaphor(r, "T2"), CorefError);
}

}  // namespace
}  // namespace biocoref
