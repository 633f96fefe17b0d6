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

#ifndef BIOCOREF_LEXICON_H_
#define BIOCOREF_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "biocoref/types.h"

namespace biocoref {

// A noun that names an entity class, e.g. "kinases" -> (Protein, plural).
struct ClassNoun {
  EntityClass cls = EntityClass::kProtein;
  bool plural = false;
};

// Closed-class word lists used to find anaphors without a parser. All
// lookups take a word in any case; entries are stored lowercased.
class TriggerDictionary {
 public:
  TriggerDictionary() = default;

  // Throws CorefError(kConfig) on malformed JSON or when a lexicon entry is
  // also listed as a stopword.
  static TriggerDictionary FromJson(std::string_view json);

  // Event type of a nominal trigger ("binding" -> Binding).
  std::optional<std::string> EventType(std::string_view word) const;
  const ClassNoun *ClassOf(std::string_view word) const;
  std::optional<Cardinality> Pronoun(std::string_view word) const;
  // True for plural mutant nouns ("mutants"); absent for other words.
  std::optional<bool> MutantNoun(std::string_view word) const;
  std::optional<MutationKind> MutationModifier(std::string_view word) const;
  // Number words and digit strings.
  std::optional<int> Numeral(std::string_view word) const;

  bool IsDefinite(std::string_view word) const;
  bool IsDemonstrative(std::string_view word) const;
  bool IsIndefinite(std::string_view word) const;
  bool IsDeterminer(std::string_view word) const {
    return IsDefinite(word) || IsIndefinite(word);
  }
  bool IsStopword(std::string_view word) const;

  // Trigger, class, or mutant noun.
  bool IsLexiconNoun(std::string_view word) const;

 private:
  std::map<std::string, std::string, std::less<>> triggers_;
  std::map<std::string, ClassNoun, std::less<>> classes_;
  std::map<std::string, Cardinality, std::less<>> pronouns_;
  std::map<std::string, bool, std::less<>> mutant_nouns_;
  std::map<std::string, MutationKind, std::less<>> modifiers_;
  std::map<std::string, int, std::less<>> numerals_;
  std::set<std::string, std::less<>> definite_;
  std::set<std::string, std::less<>> demonstratives_;
  std::set<std::string, std::less<>> indefinite_;
  std::set<std::string, std::less<>> stopwords_;
};

}  // namespace biocoref

#endif  // BIOCOREF_LEXICON_H_
