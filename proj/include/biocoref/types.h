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

#ifndef BIOCOREF_TYPES_H_
#define BIOCOREF_TYPES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/text.h"

namespace biocoref {

enum class EntityClass {
  kProtein,
  kGene,
  kGeneOrGeneProduct,
  kFamily,
  kSimpleChemical,
  kCellularComponent,
  kSite,
};

const char *EntityClassName(EntityClass cls);
std::optional<EntityClass> ParseEntityClass(std::string_view name);

// True when a mention labeled `label` can stand for an anaphor that demands
// `required`, e.g. "the protein" accepts a Family or GeneOrGeneProduct.
bool ClassCompatible(EntityClass required, EntityClass label);

enum class MutationKind {
  kPointSubstitution,
  kDeletion,
  kTruncation,
  kInsertion,
  kUnknownMutation,
};

const char *MutationKindName(MutationKind kind);
std::optional<MutationKind> ParseMutationKind(std::string_view name);

// Matches point substitution labels such as S34A or N540K.
bool IsPointSubstitutionLabel(std::string_view label);

enum class Polarity { kUnspecified, kPositive, kNegative };

const char *PolarityName(Polarity polarity);
std::optional<Polarity> ParsePolarity(std::string_view name);

// Coarse part-of-speech hint. ADJ and NUM extend the DET/PRON/NOUN/OTHER set
// so noun phrase extents can be found without a parser.
enum class PosTag { kDet, kPron, kNoun, kAdj, kNum, kOther };

const char *PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view name);

struct Token {
  Span span;
  std::string surface;
  std::optional<PosTag> pos;

  friend bool operator==(const Token &, const Token &) = default;
};

struct Sentence {
  int index = 0;
  Span span;
  std::vector<Token> tokens;

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct MutationRecord {
  MutationKind kind = MutationKind::kUnknownMutation;
  std::optional<std::string> label;

  // The mutation identity is spelled out.
  bool specified() const { return label.has_value(); }

  friend bool operator==(const MutationRecord &,
                         const MutationRecord &) = default;
};

struct EntityMention {
  std::string id;
  Span span;
  EntityClass label = EntityClass::kProtein;
  std::optional<std::string> grounding_id;
  std::vector<MutationRecord> mutations;
  std::string surface;

  bool HasSpecifiedMutation() const;

  friend bool operator==(const EntityMention &,
                         const EntityMention &) = default;
};

struct Argument {
  std::string role;
  std::string ref;

  friend bool operator==(const Argument &, const Argument &) = default;
};

struct EventMention {
  std::string id;
  Span trigger;
  std::string type;
  std::vector<Argument> args;
  Polarity polarity = Polarity::kUnspecified;
  // Argument roles satisfy the arity schema of the event type. Filled in when
  // the document is loaded against an ArgSchema.
  bool complete = false;

  friend bool operator==(const EventMention &, const EventMention &) = default;
};

// Number of antecedents an anaphor asks for.
struct Cardinality {
  enum class Kind { kOne, kExactly, kAtLeastTwo };

  Kind kind = Kind::kOne;
  int n = 1;

  static Cardinality One() { return {Kind::kOne, 1}; }
  static Cardinality Exactly(int n) { return {Kind::kExactly, n}; }
  static Cardinality AtLeastTwo() { return {Kind::kAtLeastTwo, 2}; }

  bool plural() const { return kind == Kind::kAtLeastTwo || n > 1; }
  std::string ToString() const;

  friend bool operator==(const Cardinality &, const Cardinality &) = default;
};

struct CorefLink {
  std::string anaphor_id;
  std::vector<std::string> antecedent_ids;
  std::string sieve_name;
  int confidence_rank = 0;

  friend bool operator==(const CorefLink &, const CorefLink &) = default;
};

// An event after anaphor substitution and n-ary splitting.
struct CompletedEvent {
  EventMention event;
  std::string derived_from;
  // Anaphor IDs whose links contributed to this event, sorted.
  std::vector<std::string> provenance;

  friend bool operator==(const CompletedEvent &,
                         const CompletedEvent &) = default;
};

// A mention or event removed by clean-up or completion.
struct Removal {
  std::string id;
  std::string reason;

  friend bool operator==(const Removal &, const Removal &) = default;
};

// Stable sieve names in pipeline order. The confidence rank of a link is the
// 1-based position of its sieve in this list.
inline constexpr const char *kSieveNames[] = {
    "exact_string", "shared_grounding", "mutant",      "strict_head",
    "pronominal",   "class_np",         "event_coref", "cleanup",
};
inline constexpr int kSieveCount = 8;

// 1-based pipeline position of a sieve, or 0 for unknown names.
int SieveRank(std::string_view name);

}  // namespace biocoref

#endif  // BIOCOREF_TYPES_H_
