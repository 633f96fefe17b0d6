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

#include "biocoref/document.h"

#include <algorithm>

#include "biocoref/errors.h"

namespace biocoref {

namespace {

[[noreturn]] void Violation(const std::string &subject,
                            const std::string &message) {
  throw CorefError(ErrorCode::kSchemaViolation, subject, message);
}

std::string SpanString(Span span) {
  return "[" + std::to_string(span.start) + "," + std::to_string(span.end) +
         ")";
}

}  // namespace

Document::Document(std::string doc_id, std::string text,
                   std::vector<Sentence> sentences,
                   std::vector<EntityMention> entities,
                   std::vector<EventMention> events, const ArgSchema *schema)
    : doc_id_(std::move(doc_id)),
      text_(std::move(text)),
      sentences_(std::move(sentences)),
      entities_(std::move(entities)),
      events_(std::move(events)) {
  Validate(schema);
}

void Document::Validate(const ArgSchema *schema) {
  const int n = text_.size();
  auto check_span = [&](const std::string &subject, Span span) {
    if (span.start < 0 || span.end > n || span.start >= span.end) {
      Violation(subject, "span " + SpanString(span) +
                             " outside text bounds or empty");
    }
  };

  // Sentences and tokens.
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    Sentence &s = sentences_[i];
    std::string subject = "sentence " + std::to_string(i);
    if (s.index != static_cast<int>(i)) {
      Violation(subject, "sentence index " + std::to_string(s.index) +
                             " out of order");
    }
    check_span(subject, s.span);
    if (i > 0 && sentences_[i - 1].span.end > s.span.start) {
      Violation("offset " + std::to_string(s.span.start),
                "sentences overlap or are out of order");
    }
    int previous_end = s.span.start;
    for (Token &t : s.tokens) {
      std::string token_subject = "token " + SpanString(t.span);
      check_span(token_subject, t.span);
      if (!s.span.Contains(t.span)) {
        Violation(token_subject, "token outside its sentence");
      }
      if (t.span.start < previous_end) {
        Violation(token_subject, "tokens overlap or are out of order");
      }
      previous_end = t.span.end;
      t.surface = std::string(text_.Slice(t.span));
    }
  }

  auto check_covered = [&](const std::string &subject, Span span) {
    for (const Sentence &s : sentences_) {
      if (s.span.Contains(span)) return;
    }
    Violation(subject, "span " + SpanString(span) + " not inside a sentence");
  };

  // Unique IDs across entities and events.
  index_.clear();
  int next = 0;
  auto add_id = [&](const std::string &id) {
    if (id.empty()) Violation("mention " + std::to_string(next), "empty ID");
    if (!index_.emplace(id, next++).second) Violation(id, "duplicate ID");
  };
  for (const EntityMention &e : entities_) add_id(e.id);
  for (const EventMention &e : events_) add_id(e.id);

  for (EntityMention &e : entities_) {
    check_span(e.id, e.span);
    check_covered(e.id, e.span);
    e.surface = std::string(text_.Slice(e.span));
    for (const MutationRecord &m : e.mutations) {
      if (m.kind == MutationKind::kPointSubstitution &&
          (!m.label || !IsPointSubstitutionLabel(*m.label))) {
        Violation(e.id, "point substitution needs a label like S34A");
      }
      if (m.label && m.label->empty()) {
        Violation(e.id, "empty mutation label");
      }
    }
  }

  for (EventMention &e : events_) {
    check_span(e.id, e.trigger);
    check_covered(e.id, e.trigger);
    for (const Argument &a : e.args) {
      if (a.role.empty()) Violation(e.id, "argument with empty role");
      if (index_.find(a.ref) == index_.end()) {
        Violation(a.ref, "dangling argument reference in event " + e.id);
      }
      if (a.ref == e.id) Violation(e.id, "event refers to itself");
    }
    if (schema != nullptr) {
      if (schema->Find(e.type) == nullptr) {
        Violation(e.id, "unknown event type " + e.type);
      }
      for (const Argument &a : e.args) {
        if (schema->RoleFor(e.type, a.role) == nullptr) {
          Violation(e.id, "role " + a.role + " not allowed for " + e.type);
        }
      }
      e.complete = schema->IsComplete(e);
    }
  }
}

const EntityMention *Document::FindEntity(std::string_view id) const {
  int i = MentionIndex(id);
  if (i < 0 || i >= static_cast<int>(entities_.size())) return nullptr;
  return &entities_[i];
}

const EventMention *Document::FindEvent(std::string_view id) const {
  int i = MentionIndex(id) - static_cast<int>(entities_.size());
  if (i < 0) return nullptr;
  return &events_[i];
}

std::optional<Span> Document::MentionSpan(std::string_view id) const {
  if (const EntityMention *e = FindEntity(id)) return e->span;
  if (const EventMention *e = FindEvent(id)) return e->trigger;
  return std::nullopt;
}

int Document::MentionIndex(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

const std::string &Document::MentionId(int index) const {
  const int entity_count = static_cast<int>(entities_.size());
  if (index < entity_count) return entities_[index].id;
  return events_[index - entity_count].id;
}

int Document::SentenceAt(int offset) const {
  auto it = std::upper_bound(
      sentences_.begin(), sentences_.end(), offset,
      [](int off, const Sentence &s) { return off < s.span.start; });
  if (it == sentences_.begin()) return -1;
  --it;
  if (offset < it->span.end) return it->index;
  return -1;
}

}  // namespace biocoref
