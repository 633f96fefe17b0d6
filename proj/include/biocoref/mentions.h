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

#ifndef BIOCOREF_MENTIONS_H_
#define BIOCOREF_MENTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "biocoref/document.h"
#include "biocoref/lexicon.h"
#include "biocoref/types.h"

namespace biocoref {

enum class AnaphorKind { kPronoun, kClassNp, kMutantNp, kNominalEvent };

const char *AnaphorKindName(AnaphorKind kind);

// Shorthand forms for referring back to a described mutation.
enum class MutantKind {
  kGenericMutant,  // "the deletion mutant"
  kMutationOnly,   // "the K134A mutant"
  kProteinOnly,    // "all six FGFR3 mutants"
};

const char *MutantKindName(MutantKind kind);

struct MutantNp {
  MutantKind kind = MutantKind::kGenericMutant;
  // Mutation label for kMutationOnly.
  std::optional<std::string> label;
  // Protein surface for kProteinOnly.
  std::string protein;
  Cardinality cardinality;

  friend bool operator==(const MutantNp &, const MutantNp &) = default;
};

struct AnaphorCandidate {
  std::string mention_id;
  AnaphorKind kind = AnaphorKind::kPronoun;
  // Entity class demanded by a class noun ("the protein" -> Protein).
  std::optional<EntityClass> target_class;
  // Event type demanded by a nominal event anaphor ("this binding").
  std::string target_event_type;
  Cardinality cardinality;
  Span span;
  int sentence = -1;
  bool demonstrative = false;
  std::optional<MutantNp> mutant;
  // Lowercased head noun and words of noun phrase anaphors.
  std::string head;
  std::vector<std::string> words;

  bool is_event() const { return kind == AnaphorKind::kNominalEvent; }

  friend bool operator==(const AnaphorCandidate &,
                         const AnaphorCandidate &) = default;
};

// Tokens of a document with a coarse tag on every token. Sentences without
// tokens are split on whitespace, with leading and trailing punctuation split
// off. Tags come from the input hint when present, else from the lexicons;
// words inside entity mentions count as nouns.
class TokenView {
 public:
  TokenView(const Document &doc, const TriggerDictionary &dict);

  const Document &doc() const { return *doc_; }
  const TriggerDictionary &dict() const { return *dict_; }

  const std::vector<Token> &sentence(int index) const {
    return sentences_[index];
  }

  // Tokens lying entirely inside the span.
  std::vector<Token> In(Span span) const;

  // The noun phrase around an entity mention: extended left over nouns,
  // adjectives, and numerals up to and including a determiner, and right over
  // nouns. "guanylate cyclase" in "the enzyme guanylate cyclase" yields all
  // four words.
  std::vector<Token> Phrase(const EntityMention &entity) const;

  // Lowercased words of the phrase plus those of the entity surface.
  std::vector<std::string> PhraseWords(const EntityMention &entity) const;

  // A Family mention or one whose phrase holds a plural class or mutant noun.
  bool IsPlural(const EntityMention &entity) const;

 private:
  const Document *doc_;
  const TriggerDictionary *dict_;
  std::vector<std::vector<Token>> sentences_;
};

// Tag derived from the lexicons for a token without a hint.
PosTag CoarseTag(std::string_view word, bool in_entity,
                 const TriggerDictionary &dict);

// Classifies a span containing a mutant noun. Returns absent when there is
// no mutant noun or when both the protein and the mutation are spelled out.
std::optional<MutantNp> ClassifyMutantNp(const std::vector<Token> &tokens,
                                         const TriggerDictionary &dict);

// Number of antecedents the span asks for.
Cardinality CardinalityOf(const std::vector<Token> &tokens,
                          const TriggerDictionary &dict);

// Finds anaphoric candidates: pronouns and definite class noun phrases that
// are event arguments, mutant noun phrases, and definite nominal triggers of
// incomplete events. Sorted by offset.
std::vector<AnaphorCandidate> DetectCandidates(const TokenView &tokens);
std::vector<AnaphorCandidate> DetectCandidates(const Document &doc,
                                               const TriggerDictionary &dict);

}  // namespace biocoref

#endif  // BIOCOREF_MENTIONS_H_
