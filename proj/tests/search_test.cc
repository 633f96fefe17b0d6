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

#include "biocoref/search.h"

#include <gtest/gtest.h>

#include "biocoref/mentions.h"
#include "synthetic.h"
#include "test_support.h"

namespace biocoref {
namespace {

using testing::Fixture;
using testing::Res;

// Runs the given sieves, then searches for one anaphor in its first host.
struct SearchSetup {
  explicit SearchSetup(std::string_view name, std::vector<std::string> merges = {})
      : doc(Fixture(name)),
        view(doc, Res().dict),
        candidates(DetectCandidates(view)),
        state(doc) {
    IdSet disabled;
    ResolverConfig config = Res().Config();
    SieveContext ctx(view, config, candidates, state);
    for (const std::string &m : merges) {
      if (m == "exact_string") SieveExactString(ctx);
      if (m == "shared_grounding") SieveSharedGrounding(ctx);
    }
    for (const AnaphorCandidate &c : candidates) anaphor_ids.insert(c.mention_id);
  }
  const AnaphorCandidate &Candidate(std::string_view id) const {
    for (const AnaphorCandidate &c : candidates) {
      if (c.mention_id == id) return c;
    }
    throw std::invalid_argument(std::string(id));
  }
  std::vector<std::string> Search(std::string_view id,
                                  SieveAttempt *trace = nullptr) {
    const AnaphorCandidate &c = Candidate(id);
    SearchConstraints k = HostConstraints(c, state, Res().schema, anaphor_ids);
    return LinearSearch(view, c, k, state, trace);
  }

  Document doc;
  TokenView view;
  std::vector<AnaphorCandidate> candidates;
  CorefState state;
  IdSet anaphor_ids;
};

TEST(LinearSearchTest, ChainedParticipantExcluded) {
  SearchSetup s("ex01_gsk3b_axin", {"exact_string"});
  SieveAttempt trace;
  EXPECT_EQ(s.Search("T3", &trace), (std::vector<std::string>{"T2"}));
  ASSERT_GE(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0].mention_id, "T1");
  EXPECT_EQ(trace.steps[0].reason, "chain-with-participant");
  EXPECT_TRUE(trace.steps[1].accepted);
}

TEST(LinearSearchTest, WithoutChainTheNearestWins) {
  SearchSetup s("ex01_gsk3b_axin");
  EXPECT_EQ(s.Search("T3"), (std::vector<std::string>{"T1"}));
}

TEST(LinearSearchTest, UntypedNounIsNeverAntecedent) {
  SearchSetup s("ex02_pax8");
  EXPECT_EQ(s.Search("T2"), (std::vector<std::string>{"T1"}));
}

TEST(LinearSearchTest, SentenceStartReached) {
  SearchSetup s("ex12_foxp3");
  EXPECT_EQ(s.Search("T2"), (std::vector<std::string>{"T1"}));
}

TEST(LinearSearchTest, PluralCollectsInTextOrder) {
  SearchSetup s("ex16_cul4a");
  EXPECT_EQ(s.Search("T3"), (std::vector<std::string>{"T1", "T2"}));
}

TEST(LinearSearchTest, NothingPrecedes) {
  SearchSetup s("neg_cataphor");
  EXPECT_TRUE(s.Search("T1").empty());
}

TEST(BuildConstraintsTest, ExcludesCauseAndFiltersClasses) {
  FixtureSpec spec{"phos",
                   {"KinaseX is active .", "It phosphorylates its ."},
                   {{"T1", "KinaseX", 1, EntityClass::kProtein, {}, {}},
                    {"T2", "It", 1, EntityClass::kProtein, {}, {}},
                    {"T3", "its", 1, EntityClass::kProtein, {}, {}}},
                   {{"E1", "phosphorylates", 1, "Phosphorylation",
                     Polarity::kUnspecified, {{"theme", "T3"}, {"cause", "T2"}}}},
                   {}};
  Document doc = testing::Build(spec);
  TokenView view(doc, Res().dict);
  auto cs = DetectCandidates(view);
  CorefState state(doc);
  state.Merge("T1", "T2");
  const AnaphorCandidate *its = nullptr;
  for (const auto &c : cs) {
    if (c.mention_id == "T3") its = &c;
  }
  ASSERT_NE(its, nullptr);
  SearchConstraints k =
      BuildConstraints(doc.events()[0], *its, state, Res().schema);
  EXPECT_EQ(k.excluded_ids, (IdSet{"T2"}));
  EXPECT_EQ(k.excluded_chain_members, (IdSet{"T1", "T2"}));
  ASSERT_TRUE(k.classes);
  EXPECT_EQ(*k.classes,
            (std::set<EntityClass>{EntityClass::kProtein,
                                   EntityClass::kGeneOrGeneProduct,
                                   EntityClass::kSimpleChemical}));
}

TEST(BuildConstraintsTest, BothChainMembersExcluded) {
  SearchSetup s("ex01_gsk3b_axin", {"exact_string"});
  SearchConstraints k = BuildConstraints(*s.doc.FindEvent("E1"),
                                         s.Candidate("T3"), s.state,
                                         Res().schema);
  EXPECT_TRUE(k.excluded_ids.contains("T4"));
  EXPECT_TRUE(k.excluded_chain_members.contains("T1"));
  EXPECT_TRUE(k.excluded_chain_members.contains("T4"));
}

TEST(BuildConstraintsTest, SoleArgumentExcludesNothing) {
  SearchSetup s("ex12_foxp3");
  SearchConstraints k = BuildConstraints(*s.doc.FindEvent("E1"),
                                         s.Candidate("T2"), s.state,
                                         Res().schema);
  EXPECT_TRUE(k.excluded_ids.empty());
  EXPECT_TRUE(k.excluded_chain_members.empty());
}

TEST(SearchPropertyTest, ResultsRespectConstraints) {
  testing::SyntheticCorpus corpus(Res().dict, Res().schema);
  int searched = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Document doc = corpus.Generate(seed, "syn");
    TokenView view(doc, Res().dict);
    auto cs = DetectCandidates(view);
    CorefState state(doc);
    ResolverConfig config = Res().Config();
    SieveContext ctx(view, config, cs, state);
    SieveExactString(ctx);
    SieveSharedGrounding(ctx);
    for (const AnaphorCandidate &c : cs) {
      SearchConstraints k = HostConstraints(c, state, Res().schema, ctx.anaphor_ids);
      k.need = Cardinality::AtLeastTwo();
      auto found = LinearSearch(view, c, k, state);
      ASSERT_EQ(found, LinearSearch(view, c, k, state));
      ++searched;
      for (const std::string &id : found) {
        Span span = *doc.MentionSpan(id);
        ASSERT_LE(span.end, c.span.start) << "seed " << seed;
        ASSERT_FALSE(k.excluded_ids.contains(id));
        for (const std::string &x : k.excluded_ids) {
          ASSERT_FALSE(state.SameChain(id, x)) << "seed " << seed;
        }
        ASSERT_EQ(RejectReason(doc, c, k, id), std::nullopt)
            << "seed " << seed << " " << id;
        if (const EntityMention *e = doc.FindEntity(id); e && k.classes) {
          bool ok = false;
          for (EntityClass cls : *k.classes) ok |= ClassCompatible(cls, e->label);
          ASSERT_TRUE(ok) << "seed " << seed;
        }
      }
    }
  }
  EXPECT_GT(searched, 500);
}

}  // namespace
}  // namespace biocoref
