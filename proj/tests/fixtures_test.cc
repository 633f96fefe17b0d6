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

#include <gtest/gtest.h>

#include "biocoref/fixtures.h"
#include "test_support.h"

namespace biocoref {
namespace {

using testing::ReadText;
using testing::Res;
using testing::SourcePath;

class FixtureManifestTest : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureManifestTest, AssertionsHold) {
  nlohmann::json manifest = testing::LoadManifest();
  auto failures = testing::CheckFixture(GetParam(), manifest["fixtures"][GetParam()]);
  for (const std::string &f : failures) ADD_FAILURE() << f;
}

TEST_P(FixtureManifestTest, FileMatchesDefinition) {
  const std::string on_disk =
      ReadText(SourcePath("fixtures/" + GetParam() + ".json"));
  EXPECT_EQ(SaveDocument(testing::Fixture(GetParam())), on_disk);
}

std::vector<std::string> FixtureNames() {
  std::vector<std::string> names;
  for (const FixtureSpec &spec : ExampleFixtures()) names.push_back(spec.name);
  return names;
}

INSTANTIATE_TEST_SUITE_P(All, FixtureManifestTest,
                         ::testing::ValuesIn(FixtureNames()),
                         [](const auto &info) { return info.param; });

TEST(FixtureCorpusTest, ManifestCoversEveryFixture) {
  nlohmann::json manifest = testing::LoadManifest();
  EXPECT_EQ(manifest["fixtures"].size(), ExampleFixtures().size());
  EXPECT_EQ(manifest["totals"]["docs"].get<std::size_t>(), ExampleFixtures().size());
  int coref = 0;
  int baseline = 0;
  for (const auto &[name, f] : manifest["fixtures"].items()) {
    coref += f["coref_events"].get<int>();
    baseline += f["baseline_events"].get<int>();
  }
  EXPECT_EQ(coref, manifest["totals"]["coref_events"].get<int>());
  EXPECT_EQ(baseline, manifest["totals"]["baseline_events"].get<int>());
  EXPECT_EQ(coref + baseline, manifest["totals"]["combined_events"].get<int>());
}

TEST(FixtureTokenizeTest, PeelsPunctuationAndParentheses) {
  std::vector<Span> t = FixtureTokenize("(IKKα), “co-peaked” ERK(T202/Y204).");
  std::vector<Span> want = {{0, 1},   {1, 5},   {5, 6},   {6, 7},
                            {8, 9},   {9, 18},  {18, 19}, {20, 23},
                            {23, 24}, {24, 33}, {33, 34}, {34, 35}};
  EXPECT_EQ(t, want);
}

TEST(BuildFixtureTest, UnlocatableSurfaceIsConfigError) {
  FixtureSpec spec{"bad", {"Rb binds E2F ."},
                   {{"T1", "Rb", 2, EntityClass::kProtein, {}, {}}}, {}, {}};
  EXPECT_THROW(BuildFixture(spec, Res().dict, &Res().schema), std::exception);
}

}  // namespace
}  // namespace biocoref
