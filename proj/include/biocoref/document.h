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

#ifndef BIOCOREF_DOCUMENT_H_
#define BIOCOREF_DOCUMENT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/schema.h"
#include "biocoref/text.h"
#include "biocoref/types.h"

namespace biocoref {

// A segmented document with its standoff entity and event mentions. Documents
// are validated on construction and immutable afterwards, so any number of
// threads may read one concurrently.
//
// Entities and events share one ID space. Mention indices number entities
// first, then events, in input order.
class Document {
 public:
  Document() = default;

  // Validates every invariant of the standoff model and fills in token and
  // entity surfaces. When a schema is given, event types are checked against
  // it and the `complete` flag of each event is computed. Throws
  // CorefError(kSchemaViolation) naming the offending ID or offset.
  Document(std::string doc_id, std::string text, std::vector<Sentence> sentences,
           std::vector<EntityMention> entities, std::vector<EventMention> events,
           const ArgSchema *schema = nullptr);

  const std::string &doc_id() const { return doc_id_; }
  const std::string &text() const { return text_.str(); }
  int length() const { return text_.size(); }
  const std::vector<Sentence> &sentences() const { return sentences_; }
  const std::vector<EntityMention> &entities() const { return entities_; }
  const std::vector<EventMention> &events() const { return events_; }

  std::string_view Slice(Span span) const { return text_.Slice(span); }

  const EntityMention *FindEntity(std::string_view id) const;
  const EventMention *FindEvent(std::string_view id) const;
  bool HasMention(std::string_view id) const { return MentionIndex(id) >= 0; }

  // Entity span or event trigger span.
  std::optional<Span> MentionSpan(std::string_view id) const;

  int mention_count() const {
    return static_cast<int>(entities_.size() + events_.size());
  }
  int MentionIndex(std::string_view id) const;
  const std::string &MentionId(int index) const;

  // Index of the sentence containing the offset, or -1.
  int SentenceAt(int offset) const;

  friend bool operator==(const Document &a, const Document &b) {
    return a.doc_id_ == b.doc_id_ && a.text_.str() == b.text_.str() &&
           a.sentences_ == b.sentences_ && a.entities_ == b.entities_ &&
           a.events_ == b.events_;
  }

 private:
  void Validate(const ArgSchema *schema);

  std::string doc_id_;
  Utf8Text text_;
  std::vector<Sentence> sentences_;
  std::vector<EntityMention> entities_;
  std::vector<EventMention> events_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace biocoref

#endif  // BIOCOREF_DOCUMENT_H_
