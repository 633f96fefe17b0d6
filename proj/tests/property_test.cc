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

#include <map>

#include "biocoref/batch.h"
#include "biocoref/pipeline.h"
#include "synthetic.h"
#include "test_support.h"

namespace biocoref {
namespace {

using testing::Res;

constexpr int kCases = 1000;

// Every mention belongs to exactly one chain and chains are closed under
// membership.
void ExpectPartition(const CorefState &state, const std::string &where) {
  const Document &doc = state.doc();
  std::map<int, std::vector<std::string>> by_root;
  for (int i = 0; i < doc.mention_count(); ++i) {
    const std::string &id = doc.MentionId(i);
    by_root[state.ChainOf(id)].push_back(id);
  }
  for (const auto &[root, members] : by_root) {
    ASSERT_GE(root, 0) << where;
    for (const std::string &m : members) {
      ASSERT_EQ(state.ChainMembers(m), members) << where << " " << m;
    }
  }
  std::size_t multi = 0;
  for (const auto &[root, members] : by_root) multi += members.size() > 1;
  ASSERT_EQ(state.Chains().size(), multi) << where;
}

class PipelinePropertyTest : public ::testing::Test {
 protected:
  testing::SyntheticCorpus corpus_{Res().dict, Res().schema};
};

TEST_F(PipelinePropertyTest, SieveInvariantsHoldAfterEverySieve) {
  std::map<std::string, int> links_per_sieve;
  int merges = 0;
  for (int seed = 0; seed < kCases; ++seed) {
    const Document doc = corpus_.Generate(seed, "syn");
    const std::string where = "seed " + std::to_string(seed);
    std::vector<CorefLink> previous_links;
    std::vector<std::vector<std::string>> previous_chains;
    IdSet candidates;
    for (const AnaphorCandidate &c : DetectCandidates(doc, Res().dict)) {
      candidates.insert(c.mention_id);
    }
    auto observer = [&](std::string_view sieve, const CorefState &state) {
      ExpectPartition(state, where + " after " + std::string(sieve));
      const auto &links = state.links();
      // Monotonic: earlier links are kept verbatim, earlier merges survive.
      ASSERT_GE(links.size(), previous_links.size()) << where;
      ASSERT_TRUE(std::equal(previous_links.begin(), previous_links.end(),
                             links.begin()))
          << where;
      for (const auto &chain : previous_chains) {
        for (const std::string &m : chain) {
          ASSERT_TRUE(state.SameChain(chain[0], m)) << where;
        }
      }
      // New links come from this sieve only and never re-resolve an anaphor.
      for (std::size_t i = previous_links.size(); i < links.size(); ++i) {
        ASSERT_EQ(links[i].sieve_name, sieve) << where;
        ASSERT_EQ(links[i].confidence_rank, SieveRank(sieve)) << where;
        for (std::size_t j = 0; j < i; ++j) {
          ASSERT_NE(links[j].anaphor_id, links[i].anaphor_id) << where;
        }
        ASSERT_TRUE(candidates.contains(links[i].anaphor_id)) << where;
        for (const std::string &a : links[i].antecedent_ids) {
          ASSERT_FALSE(candidates.contains(a)) << where;
          ASSERT_TRUE(state.SameChain(a, links[i].anaphor_id)) << where;
        }
        ASSERT_NO_THROW(ValidateLink(doc, links[i])) << where;
        ++links_per_sieve[links[i].sieve_name];
      }
      previous_links = links;
      previous_chains = state.Chains();
    };
    Resolution r = Resolve(doc, Res().Config({}, true), observer);
    for (const auto &chain : r.state.Chains()) merges += chain.size() - 1;
    for (const AnaphorTrace &t : r.traces) {
      ASSERT_EQ(t.linked, r.state.IsResolved(t.anaphor_id)) << where;
    }
  }
  for (const char *sieve :
       {"mutant", "strict_head", "pronominal", "class_np", "event_coref"}) {
    EXPECT_GT(links_per_sieve[sieve], 0) << sieve;
  }
  EXPECT_GT(merges, 0);
}

TEST_F(PipelinePropertyTest, LaterSievesNeverDecideEarlierLinks) {
  int checked = 0;
  for (int seed = 0; seed < kCases; ++seed) {
    const Document doc = corpus_.Generate(seed, "syn");
    ResultDocument full = testing::Run(doc);
    for (const CorefLink &link : full.links) {
      // The pipeline truncated after the winning sieve yields the same link.
      std::vector<std::string> later;
      for (const char *name : kSieveNames) {
        if (SieveRank(name) > link.confidence_rank) later.push_back(name);
      }
      ResultDocument truncated = testing::Run(doc, later);
      const CorefLink *same = testing::LinkOf(truncated, link.anaphor_id);
      ASSERT_NE(same, nullptr) << "seed " << seed;
      ASSERT_EQ(*same, link) << "seed " << seed;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST_F(PipelinePropertyTest, NoEventRelatesTwoChainMates) {
  int events = 0;
  for (int seed = 0; seed < kCases; ++seed) {
    const Document doc = corpus_.Generate(seed, "syn");
    const ResolverConfig config = Res().Config();
    Resolution r = Resolve(doc, config);
    ResultDocument result = Process(doc, config);
    for (const CompletedEvent &c : result.completed) {
      ++events;
      ASSERT_TRUE(Res().schema.IsComplete(c.event)) << "seed " << seed;
      const auto &args = c.event.args;
      for (std::size_t i = 0; i < args.size(); ++i) {
        for (std::size_t j = i + 1; j < args.size(); ++j) {
          ASSERT_NE(args[i].ref, args[j].ref) << "seed " << seed;
          if (doc.FindEntity(args[i].ref) && doc.FindEntity(args[j].ref)) {
            ASSERT_FALSE(r.state.SameChain(args[i].ref, args[j].ref))
                << "seed " << seed << " " << c.event.id;
          }
        }
      }
    }
  }
  EXPECT_GT(events, kCases);
}

TEST_F(PipelinePropertyTest, DoubleRunIsByteIdentical) {
  for (int seed = 0; seed < kCases; ++seed) {
    const Document doc = corpus_.Generate(seed, "syn");
    ASSERT_EQ(SaveResult(testing::Run(doc, {}, true)),
              SaveResult(testing::Run(doc, {}, true)))
        << "seed " << seed;
  }
}

TEST_F(PipelinePropertyTest, JobsOneEqualsJobsEight) {
  std::vector<Document> docs;
  for (int seed = 0; seed < kCases; ++seed) {
    docs.push_back(corpus_.Generate(seed, "syn" + std::to_string(seed)));
  }
  const ResolverConfig config = Res().Config({}, true);
  EXPECT_EQ(ProcessAll(docs, config, 1), ProcessAll(docs, config, 8));
}

}  // namespace
}  // namespace biocoref
