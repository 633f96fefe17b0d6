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

#include "biocoref/lexicon.h"

#include <json.hpp>

#include "biocoref/errors.h"
#include "biocoref/text.h"

namespace biocoref {

namespace {

using json = nlohmann::json;

[[noreturn]] void Bad(const std::string &subject, const std::string &message) {
  throw CorefError(ErrorCode::kConfig, subject, message);
}

const json &Section(const json &root, const char *key, bool required = true) {
  static const json kEmpty = json::object();
  auto it = root.find(key);
  if (it == root.end()) {
    if (required) Bad(key, "missing lexicon section");
    return kEmpty;
  }
  return *it;
}

std::set<std::string, std::less<>> WordSet(const json &root, const char *key) {
  std::set<std::string, std::less<>> words;
  const json &list = Section(root, key, false);
  if (list.is_object() && list.empty()) return words;
  if (!list.is_array()) Bad(key, "expected a list of words");
  for (const json &w : list) {
    if (!w.is_string()) Bad(key, "expected a list of words");
    words.insert(ToLower(w.get<std::string>()));
  }
  return words;
}

template <typename Map>
const typename Map::mapped_type *Find(const Map &map, std::string_view word) {
  auto it = map.find(ToLower(word));
  return it == map.end() ? nullptr : &it->second;
}

}  // namespace

TriggerDictionary TriggerDictionary::FromJson(std::string_view text) {
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    Bad("lexicon", "not a JSON object");
  }
  TriggerDictionary dict;
  try {
    for (const auto &[word, type] : Section(root, "event_triggers").items()) {
      dict.triggers_[ToLower(word)] = type.get<std::string>();
    }
    for (const auto &[word, spec] : Section(root, "class_lexicon").items()) {
      ClassNoun noun;
      std::string name =
          spec.is_string() ? spec.get<std::string>() : spec.at("class").get<std::string>();
      auto cls = ParseEntityClass(name);
      if (!cls) Bad(word, "unknown entity class " + name);
      noun.cls = *cls;
      if (spec.is_object()) noun.plural = spec.value("plural", false);
      dict.classes_[ToLower(word)] = noun;
    }
    for (const auto &[word, number] : Section(root, "pronouns").items()) {
      std::string n = number.get<std::string>();
      Cardinality c;
      if (n == "One") {
        c = Cardinality::One();
      } else if (n == "AtLeastTwo") {
        c = Cardinality::AtLeastTwo();
      } else {
        Bad(word, "pronoun number must be One or AtLeastTwo");
      }
      dict.pronouns_[ToLower(word)] = c;
    }
    const json &mutants = Section(root, "mutant_nouns");
    if (mutants.is_array()) {
      for (const json &w : mutants) {
        std::string word = ToLower(w.get<std::string>());
        dict.mutant_nouns_[word] = !word.empty() && word.back() == 's';
      }
    } else {
      for (const auto &[word, plural] : mutants.items()) {
        dict.mutant_nouns_[ToLower(word)] = plural.get<bool>();
      }
    }
    for (const auto &[word, kind] :
         Section(root, "mutation_modifiers", false).items()) {
      auto k = ParseMutationKind(kind.get<std::string>());
      if (!k) Bad(word, "unknown mutation kind");
      dict.modifiers_[ToLower(word)] = *k;
    }
    for (const auto &[word, value] : Section(root, "numerals", false).items()) {
      dict.numerals_[ToLower(word)] = value.get<int>();
    }
  } catch (const json::exception &e) {
    Bad("lexicon", e.what());
  }
  dict.definite_ = WordSet(root, "definite_determiners");
  if (dict.definite_.empty()) {
    dict.definite_ = {"the", "this", "that", "these", "those"};
  }
  dict.demonstratives_ = WordSet(root, "demonstratives");
  dict.indefinite_ = WordSet(root, "indefinite_determiners");
  dict.stopwords_ = WordSet(root, "stopwords");

  auto check = [&](const std::string &word, const char *section) {
    if (dict.stopwords_.contains(word)) {
      Bad(word, std::string(section) + " entry is also a stopword");
    }
  };
  for (const auto &[w, _] : dict.triggers_) check(w, "event_triggers");
  for (const auto &[w, _] : dict.classes_) check(w, "class_lexicon");
  for (const auto &[w, _] : dict.pronouns_) check(w, "pronouns");
  for (const auto &[w, _] : dict.mutant_nouns_) check(w, "mutant_nouns");
  return dict;
}

std::optional<std::string> TriggerDictionary::EventType(
    std::string_view word) const {
  if (const std::string *type = Find(triggers_, word)) return *type;
  return std::nullopt;
}

const ClassNoun *TriggerDictionary::ClassOf(std::string_view word) const {
  return Find(classes_, word);
}

std::optional<Cardinality> TriggerDictionary::Pronoun(
    std::string_view word) const {
  if (const Cardinality *c = Find(pronouns_, word)) return *c;
  return std::nullopt;
}

std::optional<bool> TriggerDictionary::MutantNoun(std::string_view word) const {
  if (const bool *plural = Find(mutant_nouns_, word)) return *plural;
  return std::nullopt;
}

std::optional<MutationKind> TriggerDictionary::MutationModifier(
    std::string_view word) const {
  if (const MutationKind *k = Find(modifiers_, word)) return *k;
  return std::nullopt;
}

std::optional<int> TriggerDictionary::Numeral(std::string_view word) const {
  if (IsDigits(word) && word.size() < 6) {
    int n = 0;
    for (char c : word) n = n * 10 + (c - '0');
    return n;
  }
  if (const int *n = Find(numerals_, word)) return *n;
  return std::nullopt;
}

bool TriggerDictionary::IsDefinite(std::string_view word) const {
  return definite_.contains(ToLower(word));
}

bool TriggerDictionary::IsDemonstrative(std::string_view word) const {
  return demonstratives_.contains(ToLower(word));
}

bool TriggerDictionary::IsIndefinite(std::string_view word) const {
  return indefinite_.contains(ToLower(word));
}

bool TriggerDictionary::IsStopword(std::string_view word) const {
  return stopwords_.contains(ToLower(word));
}

bool TriggerDictionary::IsLexiconNoun(std::string_view word) const {
  std::string w = ToLower(word);
  return triggers_.contains(w) || classes_.contains(w) ||
         mutant_nouns_.contains(w);
}

}  // namespace biocoref
