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

#include "biocoref/mentions.h"

#include <algorithm>
#include <set>

#include "biocoref/text.h"

namespace biocoref {

namespace {

bool IsSpace(std::string_view cp) {
  return cp == " " || cp == "\t" || cp == "\n" || cp == "\r" ||
         cp == "\u00a0";
}

// Whitespace tokens of a sentence, with punctuation peeled off both ends.
std::vector<Token> SplitSentence(const Document &doc, const Sentence &s) {
  std::vector<Token> tokens;
  int i = s.span.start;
  while (i < s.span.end) {
    while (i < s.span.end && IsSpace(doc.Slice({i, i + 1}))) ++i;
    int j = i;
    while (j < s.span.end && !IsSpace(doc.Slice({j, j + 1}))) ++j;
    if (j == i) break;
    int a = i;
    int b = j;
    std::vector<Token> trailing;
    while (a < b && IsPunctuation(doc.Slice({a, a + 1}))) {
      tokens.push_back({{a, a + 1}, std::string(doc.Slice({a, a + 1})), {}});
      ++a;
    }
    while (b > a && IsPunctuation(doc.Slice({b - 1, b}))) {
      trailing.push_back(
          {{b - 1, b}, std::string(doc.Slice({b - 1, b})), {}});
      --b;
    }
    if (b > a) tokens.push_back({{a, b}, std::string(doc.Slice({a, b})), {}});
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
    i = j;
  }
  return tokens;
}

std::vector<std::string> LowerWords(const std::vector<Token> &tokens) {
  std::vector<std::string> words;
  for (const Token &t : tokens) words.push_back(ToLower(t.surface));
  return words;
}

bool AnyCompleteEventInside(const Document &doc, Span span) {
  for (const EventMention &e : doc.events()) {
    if (e.complete && span.Contains(e.trigger)) return true;
  }
  return false;
}

}  // namespace

const char *AnaphorKindName(AnaphorKind kind) {
  switch (kind) {
    case AnaphorKind::kPronoun: return "Pronoun";
    case AnaphorKind::kClassNp: return "ClassNP";
    case AnaphorKind::kMutantNp: return "MutantNP";
    case AnaphorKind::kNominalEvent: return "NominalEvent";
  }
  return "???";
}

const char *MutantKindName(MutantKind kind) {
  switch (kind) {
    case MutantKind::kGenericMutant: return "GenericMutant";
    case MutantKind::kMutationOnly: return "MutationOnly";
    case MutantKind::kProteinOnly: return "ProteinOnly";
  }
  return "???";
}

PosTag CoarseTag(std::string_view word, bool in_entity,
                 const TriggerDictionary &dict) {
  if (dict.IsDeterminer(word)) return PosTag::kDet;
  if (dict.Pronoun(word)) return PosTag::kPron;
  if (dict.Numeral(word)) return PosTag::kNum;
  if (IsPunctuation(word)) return PosTag::kOther;
  if (in_entity || dict.IsLexiconNoun(word)) return PosTag::kNoun;
  return PosTag::kOther;
}

TokenView::TokenView(const Document &doc, const TriggerDictionary &dict)
    : doc_(&doc), dict_(&dict) {
  for (const Sentence &s : doc.sentences()) {
    std::vector<Token> tokens =
        s.tokens.empty() ? SplitSentence(doc, s) : s.tokens;
    for (Token &t : tokens) {
      if (t.pos) continue;
      bool in_entity = false;
      for (const EntityMention &e : doc.entities()) {
        if (e.span.Contains(t.span)) {
          in_entity = true;
          break;
        }
      }
      t.pos = CoarseTag(t.surface, in_entity, dict);
    }
    sentences_.push_back(std::move(tokens));
  }
}

std::vector<Token> TokenView::In(Span span) const {
  std::vector<Token> out;
  int s = doc_->SentenceAt(span.start);
  if (s < 0) return out;
  for (const Token &t : sentences_[s]) {
    if (span.Contains(t.span)) out.push_back(t);
  }
  return out;
}

std::vector<Token> TokenView::Phrase(const EntityMention &entity) const {
  int s = doc_->SentenceAt(entity.span.start);
  if (s < 0) return {};
  const std::vector<Token> &tokens = sentences_[s];
  int first = -1;
  int last = -1;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    if (entity.span.Contains(tokens[i].span)) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return {};
  int left = first;
  for (int k = first - 1; k >= 0; --k) {
    PosTag tag = *tokens[k].pos;
    if (tokens[k].span.end > entity.span.start) break;
    if (tag == PosTag::kDet) {
      left = k;
      break;
    }
    if (tag != PosTag::kNoun && tag != PosTag::kAdj && tag != PosTag::kNum) {
      break;
    }
    left = k;
  }
  int right = last;
  for (int k = last + 1; k < static_cast<int>(tokens.size()); ++k) {
    if (*tokens[k].pos != PosTag::kNoun) break;
    right = k;
  }
  return std::vector<Token>(tokens.begin() + left, tokens.begin() + right + 1);
}

std::vector<std::string> TokenView::PhraseWords(
    const EntityMention &entity) const {
  std::vector<std::string> words = LowerWords(Phrase(entity));
  for (std::string &w : SplitWhitespace(ToLower(entity.surface))) {
    words.push_back(std::move(w));
  }
  return words;
}

bool TokenView::IsPlural(const EntityMention &entity) const {
  if (entity.label == EntityClass::kFamily) return true;
  for (const Token &t : Phrase(entity)) {
    const ClassNoun *noun = dict_->ClassOf(t.surface);
    if (noun != nullptr && noun->plural) return true;
    auto mutant = dict_->MutantNoun(t.surface);
    if (mutant && *mutant) return true;
  }
  return false;
}

std::optional<MutantNp> ClassifyMutantNp(const std::vector<Token> &tokens,
                                         const TriggerDictionary &dict) {
  int noun = -1;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    if (dict.MutantNoun(tokens[i].surface)) noun = i;
  }
  if (noun < 0) return std::nullopt;
  bool plural = *dict.MutantNoun(tokens[noun].surface);
  std::optional<std::string> label;
  std::optional<int> numeral;
  std::vector<std::string> protein;
  for (int i = 0; i < noun; ++i) {
    const Token &t = tokens[i];
    const std::string &w = t.surface;
    if (t.pos == PosTag::kAdj || t.pos == PosTag::kDet) continue;
    if (dict.IsDeterminer(w) || dict.IsStopword(w) || IsPunctuation(w)) {
      continue;
    }
    if (auto n = dict.Numeral(w)) {
      numeral = *n;
      continue;
    }
    if (dict.MutationModifier(w) || dict.IsLexiconNoun(w)) continue;
    if (IsPointSubstitutionLabel(w)) {
      if (!label) label = w;
      continue;
    }
    protein.push_back(w);
  }
  if (label && !protein.empty()) return std::nullopt;
  MutantNp np;
  np.cardinality = numeral ? Cardinality::Exactly(*numeral)
                   : plural ? Cardinality::AtLeastTwo()
                            : Cardinality::One();
  if (label) {
    np.kind = MutantKind::kMutationOnly;
    np.label = label;
  } else if (!protein.empty()) {
    np.kind = MutantKind::kProteinOnly;
    for (const std::string &w : protein) {
      if (!np.protein.empty()) np.protein += ' ';
      np.protein += w;
    }
  } else {
    np.kind = MutantKind::kGenericMutant;
  }
  return np;
}

Cardinality CardinalityOf(const std::vector<Token> &tokens,
                          const TriggerDictionary &dict) {
  if (tokens.size() == 1) {
    if (auto c = dict.Pronoun(tokens[0].surface)) return *c;
  }
  bool plural = false;
  for (const Token &t : tokens) {
    if (auto n = dict.Numeral(t.surface); n && *n >= 1) {
      return Cardinality::Exactly(*n);
    }
    const ClassNoun *noun = dict.ClassOf(t.surface);
    if (noun != nullptr && noun->plural) plural = true;
    auto mutant = dict.MutantNoun(t.surface);
    if (mutant && *mutant) plural = true;
  }
  return plural ? Cardinality::AtLeastTwo() : Cardinality::One();
}

std::vector<AnaphorCandidate> DetectCandidates(const TokenView &view) {
  const Document &doc = view.doc();
  const TriggerDictionary &dict = view.dict();
  std::set<std::string, std::less<>> arguments;
  for (const EventMention &e : doc.events()) {
    for (const Argument &a : e.args) arguments.insert(a.ref);
  }

  std::vector<AnaphorCandidate> out;
  for (const EntityMention &e : doc.entities()) {
    std::vector<Token> tokens = view.In(e.span);
    if (tokens.empty()) continue;
    AnaphorCandidate c;
    c.mention_id = e.id;
    c.span = e.span;
    c.sentence = doc.SentenceAt(e.span.start);
    c.words = LowerWords(tokens);

    if (auto mutant = ClassifyMutantNp(tokens, dict)) {
      c.kind = AnaphorKind::kMutantNp;
      c.cardinality = mutant->cardinality;
      c.mutant = std::move(mutant);
      c.demonstrative = dict.IsDemonstrative(tokens[0].surface);
      c.head = ToLower(tokens.back().surface);
      out.push_back(std::move(c));
      continue;
    }
    if (!arguments.contains(e.id)) continue;

    if (tokens.size() == 1 && dict.Pronoun(tokens[0].surface)) {
      c.kind = AnaphorKind::kPronoun;
      c.cardinality = *dict.Pronoun(tokens[0].surface);
      c.head = c.words[0];
      out.push_back(std::move(c));
      continue;
    }
    if (tokens.size() >= 2 && dict.IsDefinite(tokens[0].surface)) {
      const ClassNoun *noun = nullptr;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (const ClassNoun *n = dict.ClassOf(tokens[i].surface)) {
          noun = n;
          c.head = c.words[i];
        }
      }
      if (noun == nullptr) continue;
      c.kind = AnaphorKind::kClassNp;
      c.target_class = noun->cls;
      c.cardinality = CardinalityOf(tokens, dict);
      c.demonstrative = dict.IsDemonstrative(tokens[0].surface);
      out.push_back(std::move(c));
    }
  }

  // Nominal event anaphors: a definite determiner, at most three modifiers,
  // then the trigger noun of an incomplete event heading its phrase.
  constexpr int kMaxModifiers = 3;
  for (const EventMention &e : doc.events()) {
    if (e.complete) continue;
    int s = doc.SentenceAt(e.trigger.start);
    if (s < 0) continue;
    const std::vector<Token> &tokens = view.sentence(s);
    int t = -1;
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      if (tokens[i].span == e.trigger) t = i;
    }
    if (t < 0 || !dict.EventType(tokens[t].surface)) continue;
    if (t + 1 < static_cast<int>(tokens.size()) &&
        dict.IsLexiconNoun(tokens[t + 1].surface)) {
      continue;
    }
    int det = -1;
    for (int k = t - 1; k >= 0 && k >= t - 1 - kMaxModifiers; --k) {
      if (dict.IsDefinite(tokens[k].surface)) {
        det = k;
        break;
      }
      PosTag tag = *tokens[k].pos;
      if (tag != PosTag::kNoun && tag != PosTag::kAdj && tag != PosTag::kNum) {
        break;
      }
    }
    if (det < 0) continue;
    Span span{tokens[det].span.start, tokens[t].span.end};
    if (AnyCompleteEventInside(doc, span)) continue;
    AnaphorCandidate c;
    c.mention_id = e.id;
    c.kind = AnaphorKind::kNominalEvent;
    c.target_event_type = e.type;
    c.cardinality = Cardinality::One();
    c.span = span;
    c.sentence = s;
    c.demonstrative = dict.IsDemonstrative(tokens[det].surface);
    c.head = ToLower(tokens[t].surface);
    for (int k = det; k <= t; ++k) c.words.push_back(ToLower(tokens[k].surface));
    out.push_back(std::move(c));
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const AnaphorCandidate &a, const AnaphorCandidate &b) {
                     if (a.span.start != b.span.start) {
                       return a.span.start < b.span.start;
                     }
                     return a.mention_id < b.mention_id;
                   });
  return out;
}

std::vector<AnaphorCandidate> DetectCandidates(const Document &doc,
                                               const TriggerDictionary &dict) {
  return DetectCandidates(TokenView(doc, dict));
}

}  // namespace biocoref
