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

#ifndef BIOCOREF_SCHEMA_H_
#define BIOCOREF_SCHEMA_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/types.h"

namespace biocoref {

// Participant requirements for one role of an event type.
struct RoleSpec {
  std::string name;
  std::vector<EntityClass> classes;
  // The role may hold another event (regulations).
  bool accepts_events = false;
  // Number of participant slots the role must fill.
  int count = 1;
  bool optional = false;

  bool Accepts(EntityClass cls) const;
};

struct EventTypeSpec {
  std::string type;
  // Regulation-family types take events as participants.
  bool regulation = false;
  std::vector<RoleSpec> roles;

  const RoleSpec *FindRole(std::string_view name) const;
};

// A participant position of an event. Arguments sharing a slot are conjoined
// alternatives ("PIK3CA and BRAF") that the completion step splits apart.
struct ArgSlot {
  std::string role;
  std::vector<std::size_t> args;
};

// Argument schema per event type, loaded from JSON of the form
//
//   {"Binding": {"theme": {"classes": [...], "count": 2}},
//    "Regulation": {"_regulation": true,
//                   "controlled": {"classes": [...], "events": true}}}
//
// Argument roles may carry a numeric slot suffix: "theme1" and "theme2" fill
// the two slots of "theme". Unsuffixed arguments of a single-slot role are
// conjoined into one slot; unsuffixed arguments of a multi-slot role each
// take their own slot.
class ArgSchema {
 public:
  ArgSchema() = default;

  // Throws CorefError(kConfig) on malformed schema JSON.
  static ArgSchema FromJson(std::string_view json);

  const EventTypeSpec *Find(std::string_view type) const;

  // Throws CorefError(kSchemaMissing) when the type has no row.
  const EventTypeSpec &Require(std::string_view type) const;

  bool IsRegulation(std::string_view type) const;

  // Role spec for an argument role string, resolving slot suffixes.
  const RoleSpec *RoleFor(std::string_view type, std::string_view role) const;

  // Groups the event's arguments into slots in order of first appearance.
  // Arguments with unknown roles get a slot of their own.
  std::vector<ArgSlot> Slots(const EventMention &event) const;

  // The argument roles satisfy the arity schema of the event type.
  bool IsComplete(const EventMention &event) const;

  std::vector<std::string> types() const;

 private:
  std::map<std::string, EventTypeSpec, std::less<>> types_;
};

}  // namespace biocoref

#endif  // BIOCOREF_SCHEMA_H_
