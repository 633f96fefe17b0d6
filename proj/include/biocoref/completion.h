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

#ifndef BIOCOREF_COMPLETION_H_
#define BIOCOREF_COMPLETION_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biocoref/coref_state.h"
#include "biocoref/document.h"
#include "biocoref/mentions.h"
#include "biocoref/schema.h"
#include "biocoref/search.h"
#include "biocoref/types.h"

namespace biocoref {

struct Assignment {
  std::string anaphor_id;
  std::vector<std::string> antecedent_ids;

  friend bool operator==(const Assignment &, const Assignment &) = default;
};

// Pairs the anaphors of one event with antecedent groups left to right: the
// i-th anaphor in text order takes the i-th group in text order. When
// `accepts` rejects a pairing, that anaphor stays unresolved. Surplus
// anaphors stay unresolved.
std::vector<Assignment> AssignMultiAnaphors(
    const Document &doc, std::vector<std::string> anaphors,
    std::vector<std::vector<std::string>> groups,
    const std::function<bool(const std::string &,
                             const std::vector<std::string> &)> &accepts = {});

// What an argument reference turns into: its replacements, each carrying the
// anaphor IDs that produced it. An empty list drops the argument.
struct Substitute {
  std::string id;
  std::vector<std::string> provenance;
};
using SubstitutionMap = std::map<std::string, std::vector<Substitute>, std::less<>>;

// Replaces arguments per the map (unlisted references stay as they are) and
// splits the event into one child per combination of slot members. Members
// of one slot never pair with each other, and children with two arguments
// from one chain are discarded. Children are numbered "<id>.<k>" when there
// is more than one. On failure returns nothing and sets `failure` to
// "IncompleteAfterSubstitution" or "SelfRelation".
std::vector<CompletedEvent> SubstituteAndSplit(const EventMention &event,
                                               const SubstitutionMap &subs,
                                               const CorefState &state,
                                               const ArgSchema &schema,
                                               std::string *failure = nullptr);

struct Completion {
  std::vector<CompletedEvent> events;
  std::vector<Removal> dropped;
};

// Completes every event of the document that is not itself an anaphor and
// was not removed by clean-up. Events are processed so that referenced events
// come first; a regulation over a split event is duplicated per child.
Completion CompleteEvents(const Document &doc, const CorefState &state,
                          const std::vector<AnaphorCandidate> &candidates,
                          const IdSet &removed, const ArgSchema &schema);

}  // namespace biocoref

#endif  // BIOCOREF_COMPLETION_H_
