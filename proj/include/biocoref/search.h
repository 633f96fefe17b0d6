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

#ifndef BIOCOREF_SEARCH_H_
#define BIOCOREF_SEARCH_H_

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/coref_state.h"
#include "biocoref/mentions.h"
#include "biocoref/schema.h"
#include "biocoref/trace.h"

namespace biocoref {

using IdSet = std::set<std::string, std::less<>>;

// Filters an antecedent must pass, built from the anaphor and the events it
// participates in.
struct SearchConstraints {
  // Entity classes allowed by the anaphor's roles; absent means any class.
  std::optional<std::set<EntityClass>> classes;
  // Class demanded by the anaphor itself ("the protein").
  std::optional<EntityClass> required_class;
  // Non-empty for event anaphors: only complete events of this type qualify.
  std::string event_type;
  // Other participants of the host events.
  IdSet excluded_ids;
  // Mentions sharing a chain with an excluded participant.
  IdSet excluded_chain_members;
  // Mentions already taken by an earlier anaphor of the same event.
  IdSet claimed_ids;
  // Anaphor candidates never serve as antecedents.
  IdSet anaphor_ids;
  Cardinality need;
  // Extra predicate with the reason reported on rejection.
  std::function<bool(const EntityMention &)> extra;
  std::string extra_reason;
};

// Constraints for an anaphor that is an argument of `event`. Throws
// CorefError(kSchemaMissing) when the event type has no schema row.
SearchConstraints BuildConstraints(const EventMention &event,
                                   const AnaphorCandidate &anaphor,
                                   const CorefState &state,
                                   const ArgSchema &schema);

// Constraints for an anaphor across all events it participates in:
// exclusions are united and class filters intersected. `anaphor_ids` lists
// all detected candidates.
SearchConstraints HostConstraints(const AnaphorCandidate &anaphor,
                                  const CorefState &state,
                                  const ArgSchema &schema,
                                  const IdSet &anaphor_ids);

// Rejection reason for a mention as antecedent of the anaphor, or absent
// when the mention qualifies. Offsets are not checked here.
std::optional<std::string> RejectReason(const Document &doc,
                                        const AnaphorCandidate &anaphor,
                                        const SearchConstraints &constraints,
                                        std::string_view mention_id);

// Whether the antecedents meet the anaphor's cardinality. A single plural
// mention satisfies AtLeastTwo.
bool Satisfied(const std::vector<std::string> &ids, const Cardinality &need,
               const TokenView &view);

// Word-order antecedent search. Scans the anaphor's sentence left to right
// over mentions ending before the anaphor starts, then, if the need is still
// unmet, the immediately previous sentence left to right. Collection stops at
// the first hit for One and at n hits for Exactly(n); AtLeastTwo takes every
// qualifying mention of the sentence that satisfies it. At most one mention
// per chain is taken. Returns IDs in text order; the list may fall short of
// the need.
std::vector<std::string> LinearSearch(const TokenView &view,
                                      const AnaphorCandidate &anaphor,
                                      const SearchConstraints &constraints,
                                      const CorefState &state,
                                      SieveAttempt *trace = nullptr);

}  // namespace biocoref

#endif  // BIOCOREF_SEARCH_H_
