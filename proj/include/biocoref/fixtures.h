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

#ifndef BIOCOREF_FIXTURES_H_
#define BIOCOREF_FIXTURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/document.h"
#include "biocoref/lexicon.h"
#include "biocoref/schema.h"
#include "biocoref/types.h"

namespace biocoref {

// Mentions are located by surface: the n-th occurrence (1-based) that starts
// and ends on token boundaries.
struct FixtureEntity {
  std::string id;
  std::string surface;
  int occurrence = 1;
  EntityClass label = EntityClass::kProtein;
  std::optional<std::string> grounding;
  std::vector<MutationRecord> mutations;
};

struct FixtureEvent {
  std::string id;
  std::string trigger;
  int occurrence = 1;
  std::string type;
  Polarity polarity = Polarity::kUnspecified;
  std::vector<Argument> args;
};

struct FixtureSpec {
  std::string name;
  // Joined with single spaces.
  std::vector<std::string> sentences;
  std::vector<FixtureEntity> entities;
  std::vector<FixtureEvent> events;
  // Words tagged ADJ in the part-of-speech hints.
  std::vector<std::string> adjectives;
};

// Splits on spaces, splits off parentheses, and peels leading and trailing
// punctuation into tokens of their own. Offsets are relative to `text`.
std::vector<Span> FixtureTokenize(std::string_view text);

// Builds the document with tokens and part-of-speech hints. Throws
// CorefError(kConfig) when a surface cannot be located.
Document BuildFixture(const FixtureSpec &spec, const TriggerDictionary &dict,
                      const ArgSchema *schema);

// The examples corpus, in file order.
const std::vector<FixtureSpec> &ExampleFixtures();

}  // namespace biocoref

#endif  // BIOCOREF_FIXTURES_H_
