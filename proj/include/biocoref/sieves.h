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

#ifndef BIOCOREF_SIEVES_H_
#define BIOCOREF_SIEVES_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/coref_state.h"
#include "biocoref/grounding.h"
#include "biocoref/lexicon.h"
#include "biocoref/mentions.h"
#include "biocoref/schema.h"
#include "biocoref/search.h"
#include "biocoref/trace.h"

namespace biocoref {

struct ResolverConfig {
  const TriggerDictionary *dict = nullptr;
  const ArgSchema *schema = nullptr;
  // Optional; without a table only precomputed grounding IDs are used.
  const GroundingTable *grounding = nullptr;
  // Names of sieves to skip.
  IdSet disabled;
  // Record per-anaphor search traces.
  bool trace = false;
};

// Validates sieve names for --disable-sieve. "all" expands to every sieve.
// Throws CorefError(kConfig) on unknown names.
IdSet ParseDisabledSieves(const std::vector<std::string> &names);

// Shared state of one document's pass through the sieves.
struct SieveContext {
  SieveContext(const TokenView &view, const ResolverConfig &config,
               const std::vector<AnaphorCandidate> &candidates,
               CorefState &state);

  const TokenView &view;
  const ResolverConfig &config;
  const std::vector<AnaphorCandidate> &candidates;
  IdSet anaphor_ids;
  CorefState &state;
  // Parallel to candidates; empty unless tracing.
  std::vector<AnaphorTrace> traces;
  // Mentions and events removed by clean-up, in removal order.
  std::vector<Removal> removed;

  const ArgSchema &schema() const { return *config.schema; }
  const TriggerDictionary &dict() const { return *config.dict; }
  // New trace record for a candidate, or null when not tracing.
  SieveAttempt *Attempt(std::size_t candidate, std::string_view sieve);
};

// Merges entity mentions with identical surfaces (case-sensitive). Mentions
// with different mutation records stay apart.
void SieveExactString(SieveContext &ctx);

// Merges entity mentions that ground to the same canonical ID.
void SieveSharedGrounding(SieveContext &ctx);

// Links protein-only mutant phrases ("all six FGFR3 mutants") to earlier
// mentions of that protein with a spelled-out mutation.
void SieveMutantMatch(SieveContext &ctx);

// Links a definite class noun phrase to the nearest earlier mention whose
// phrase contains its head and all its other content words.
void SieveStrictHeadMatch(SieveContext &ctx);

// Resolves pronouns by linear search under event constraints.
void SievePronominal(SieveContext &ctx);

// Resolves class noun phrases and the generic and mutation-only mutant
// phrases by linear search restricted to the demanded class.
void SieveClassNp(SieveContext &ctx);

// Links a nominal event anaphor that participates in a regulation to an
// earlier complete event of the same type.
void SieveEventCoref(SieveContext &ctx);

// Removes unresolved candidates and the events that become incomplete
// without them.
void SieveCleanup(SieveContext &ctx);

}  // namespace biocoref

#endif  // BIOCOREF_SIEVES_H_
