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

#include "biocoref/mentions.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "synthetic.h"
#include "test_support.h"

namespace biocoref {
namespace {

using testing::Build;
using testing::Fixture;
using testing::Res;

std::vector<AnaphorCandidate> Detect(const Document &doc) {
  return DetectCandidates(doc, Res().dict);
}

const AnaphorCandidate *Find(const std::vector<AnaphorCandidate> &cs,
                             std::string_view id) {
  for (const AnaphorCandidate &c : cs) {
    if (c.mention_id == id) return &c;
  }
  return nullptr;
}

// Tokens of a single-sentence document covering the first entity.
std::vector<Token> PhraseTokens(const std::string &sentence,
                                const std::string &surface) {
  FixtureSpec spec{"np", {sentence}, {{"T1", surface, 1, EntityClass::kProtein, {}, {}}},
                   {}, {}};
  Document doc = Build(spec);
  TokenView view(doc, Res().dict);
  return view.In(doc.entities()[0].span);
}

TEST(DetectCandidatesTest, PronounArgument) {
  auto cs = Detect(Fixture("ex12_foxp3"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].mention_id, "T2");
  EXPECT_EQ(cs[0].kind, AnaphorKind::kPronoun);
  EXPECT_EQ(cs[0].cardinality, Cardinality::One());
}

TEST(DetectCandidatesTest, DefiniteClassNoun) {
  auto cs = Detect(Fixture("ex13_rb"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].mention_id, "T3");
  EXPECT_EQ(cs[0].kind, AnaphorKind::kClassNp);
  EXPECT_EQ(cs[0].target_class, EntityClass::kProtein);
}

TEST(DetectCandidatesTest, IndefiniteNounIsNotCandidate) {
  auto cs = Detect(Fixture("neg_a_kinase"));
  EXPECT_EQ(Find(cs, "T1"), nullptr);
  ASSERT_NE(Find(cs, "T3"), nullptr);
  EXPECT_TRUE(Find(cs, "T3")->demonstrative);
}

TEST(DetectCandidatesTest, NominalEvent) {
  auto cs = Detect(Fixture("ex18_ll37"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].mention_id, "E2");
  EXPECT_EQ(cs[0].kind, AnaphorKind::kNominalEvent);
  EXPECT_EQ(cs[0].target_event_type, "Binding");
}

TEST(DetectCandidatesTest, ExpletiveItIsEmitted) {
  auto cs = Detect(Fixture("neg_expletive"));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].mention_id, "T1");
  EXPECT_EQ(cs[0].kind, AnaphorKind::kPronoun);
}

TEST(DetectCandidatesTest, CompleteNominalEventsAreNotCandidates) {
  EXPECT_TRUE(Detect(Fixture("ex03_which")).empty());
  EXPECT_TRUE(Detect(Fixture("ex04_appositive")).empty());
}

TEST(ClassifyMutantNpTest, MutationOnly) {
  auto m = ClassifyMutantNp(
      PhraseTokens("It binds the S34A mutant .", "the S34A mutant"), Res().dict);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kind, MutantKind::kMutationOnly);
  EXPECT_EQ(m->label, "S34A");
}

TEST(ClassifyMutantNpTest, ProteinOnlyWithCount) {
  auto m = ClassifyMutantNp(
      PhraseTokens("Then all six FGFR3 mutants bind .", "all six FGFR3 mutants"),
      Res().dict);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kind, MutantKind::kProteinOnly);
  EXPECT_EQ(m->protein, "FGFR3");
  EXPECT_EQ(m->cardinality, Cardinality::Exactly(6));
}

TEST(ClassifyMutantNpTest, GenericMutant) {
  auto m = ClassifyMutantNp(
      PhraseTokens("We used the deletion mutant .", "the deletion mutant"),
      Res().dict);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->kind, MutantKind::kGenericMutant);
}

TEST(ClassifyMutantNpTest, PlainNounIsNotMutant) {
  EXPECT_FALSE(ClassifyMutantNp(
      PhraseTokens("We used the protein .", "the protein"), Res().dict));
}

TEST(CardinalityTest, Examples) {
  EXPECT_EQ(CardinalityOf(PhraseTokens("We saw its .", "its"), Res().dict),
            Cardinality::One());
  EXPECT_EQ(CardinalityOf(PhraseTokens("We saw their .", "their"), Res().dict),
            Cardinality::AtLeastTwo());
  EXPECT_EQ(CardinalityOf(PhraseTokens("So all six FGFR3 mutants bind .",
                                       "all six FGFR3 mutants"),
                          Res().dict),
            Cardinality::Exactly(6));
  EXPECT_EQ(CardinalityOf(PhraseTokens("So these proteins bind .",
                                       "these proteins"),
                          Res().dict),
            Cardinality::AtLeastTwo());
}

TEST(MentionsPropertyTest, CandidateInvariants) {
  testing::SyntheticCorpus corpus(Res().dict, Res().schema);
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Document doc = corpus.Generate(seed, "syn");
    TokenView view(doc, Res().dict);
    auto cs = DetectCandidates(view);
    ASSERT_EQ(cs, DetectCandidates(view)) << "seed " << seed;
    for (std::size_t i = 1; i < cs.size(); ++i) {
      ASSERT_LT(cs[i - 1].span, cs[i].span) << "seed " << seed;
      ASSERT_NE(cs[i - 1].mention_id, cs[i].mention_id);
    }
    for (const AnaphorCandidate &c : cs) {
      ++seen;
      auto tokens = view.In(c.span);
      ASSERT_FALSE(tokens.empty());
      const bool definite = Res().dict.IsDefinite(tokens[0].surface) ||
                            tokens[0].surface == "all";
      const bool pronoun = c.kind == AnaphorKind::kPronoun;
      const bool mutant = c.kind == AnaphorKind::kMutantNp;
      ASSERT_TRUE(definite || pronoun || mutant)
          << "seed " << seed << " " << c.mention_id;
      ASSERT_FALSE(Res().dict.IsIndefinite(tokens[0].surface));
      if (c.is_event()) continue;
      const bool argument = std::any_of(
          doc.events().begin(), doc.events().end(), [&](const EventMention &e) {
            return std::any_of(e.args.begin(), e.args.end(),
                               [&](const Argument &a) {
                                 return a.ref == c.mention_id;
                               });
          });
      ASSERT_TRUE(argument) << "seed " << seed << " " << c.mention_id;
    }
  }
  EXPECT_GT(seen, 500);
}

}  // namespace
}  // namespace biocoref
