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

#include "biocoref/standoff.h"

#include <json.hpp>
#include <set>

#include "biocoref/errors.h"

namespace biocoref {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void Violation(const std::string &subject,
                            const std::string &message) {
  throw CorefError(ErrorCode::kSchemaViolation, subject, message);
}

const json &Field(const json &j, const char *key, const std::string &where) {
  if (!j.is_object()) Violation(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Violation(where, std::string("missing field ") + key);
  return *it;
}

std::string String(const json &j, const char *key, const std::string &where) {
  const json &v = Field(j, key, where);
  if (!v.is_string()) Violation(where, std::string(key) + " must be a string");
  return v.get<std::string>();
}

int Int(const json &j, const char *key, const std::string &where) {
  const json &v = Field(j, key, where);
  if (!v.is_number_integer()) {
    Violation(where, std::string(key) + " must be an integer");
  }
  return v.get<int>();
}

const json &Array(const json &j, const char *key, const std::string &where) {
  const json &v = Field(j, key, where);
  if (!v.is_array()) Violation(where, std::string(key) + " must be an array");
  return v;
}

// Optional string field; absent and null both mean "no value".
std::optional<std::string> OptString(const json &j, const char *key,
                                     const std::string &where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    Violation(where, std::string(key) + " must be a string");
  }
  return it->get<std::string>();
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw CorefError(ErrorCode::kMalformedInput,
                     "byte " + std::to_string(e.byte), e.what());
  }
}

EventMention ParseEvent(const json &j, const std::string &where) {
  EventMention e;
  e.id = String(j, "id", where);
  const std::string subject = e.id.empty() ? where : e.id;
  e.trigger = {Int(j, "trigger_start", subject), Int(j, "trigger_end", subject)};
  e.type = String(j, "type", subject);
  if (auto p = OptString(j, "polarity", subject)) {
    auto polarity = ParsePolarity(*p);
    if (!polarity) Violation(subject, "unknown polarity " + *p);
    e.polarity = *polarity;
  }
  for (const json &a : Array(j, "args", subject)) {
    e.args.push_back({String(a, "role", subject), String(a, "ref", subject)});
  }
  return e;
}

Document ParseDocument(const json &j, const ArgSchema *schema) {
  if (!j.is_object()) Violation("document", "expected an object");
  std::string doc_id = String(j, "doc_id", "document");
  std::string text = String(j, "text", doc_id);

  std::vector<Sentence> sentences;
  for (const json &s : Array(j, "sentences", doc_id)) {
    Sentence sentence;
    std::string where = doc_id + " sentence";
    sentence.index = Int(s, "index", where);
    sentence.span = {Int(s, "start", where), Int(s, "end", where)};
    if (s.contains("tokens")) {
      for (const json &t : Array(s, "tokens", where)) {
        Token token;
        token.span = {Int(t, "start", where), Int(t, "end", where)};
        if (auto pos = OptString(t, "pos", where)) {
          auto tag = ParsePosTag(*pos);
          if (!tag) Violation(where, "unknown pos tag " + *pos);
          token.pos = *tag;
        }
        sentence.tokens.push_back(std::move(token));
      }
    }
    sentences.push_back(std::move(sentence));
  }

  std::vector<EntityMention> entities;
  for (const json &e : Array(j, "entities", doc_id)) {
    EntityMention m;
    m.id = String(e, "id", doc_id + " entity");
    const std::string &where = m.id;
    m.span = {Int(e, "start", where), Int(e, "end", where)};
    std::string label = String(e, "label", where);
    auto cls = ParseEntityClass(label);
    if (!cls) Violation(where, "unknown entity label " + label);
    m.label = *cls;
    m.grounding_id = OptString(e, "grounding", where);
    if (e.contains("mutations")) {
      for (const json &mut : Array(e, "mutations", where)) {
        std::string kind = String(mut, "kind", where);
        auto k = ParseMutationKind(kind);
        if (!k) Violation(where, "unknown mutation kind " + kind);
        m.mutations.push_back({*k, OptString(mut, "label", where)});
      }
    }
    entities.push_back(std::move(m));
  }

  std::vector<EventMention> events;
  for (const json &e : Array(j, "events", doc_id)) {
    events.push_back(ParseEvent(e, doc_id + " event"));
  }

  try {
    return Document(std::move(doc_id), std::move(text), std::move(sentences),
                    std::move(entities), std::move(events), schema);
  } catch (const CorefError &e) {
    if (e.code() == ErrorCode::kMalformedInput) {
      throw CorefError(ErrorCode::kMalformedInput, j.value("doc_id", ""),
                       "text is not valid UTF-8");
    }
    throw;
  }
}

// Splits text into JSON values: a single value, the elements of a top-level
// array, or one value per non-empty line.
std::vector<json> SplitValues(std::string_view text) {
  std::vector<json> values;
  json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (json &v : whole) values.push_back(std::move(v));
    } else {
      values.push_back(std::move(whole));
    }
    return values;
  }
  std::size_t pos = 0;
  int line_no = 0;
  int non_empty = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      ++non_empty;
      try {
        values.push_back(json::parse(line));
      } catch (const json::parse_error &e) {
        throw CorefError(ErrorCode::kMalformedInput,
                         "line " + std::to_string(line_no), e.what());
      }
    }
    pos = nl + 1;
  }
  if (non_empty == 0) Parse(text);  // empty input: report as bad JSON
  return values;
}

ojson EventJson(const EventMention &e) {
  ojson j;
  j["id"] = e.id;
  j["trigger_start"] = e.trigger.start;
  j["trigger_end"] = e.trigger.end;
  j["type"] = e.type;
  j["polarity"] = PolarityName(e.polarity);
  ojson args = ojson::array();
  for (const Argument &a : e.args) {
    ojson arg;
    arg["role"] = a.role;
    arg["ref"] = a.ref;
    args.push_back(std::move(arg));
  }
  j["args"] = std::move(args);
  return j;
}

ojson DocumentJson(const Document &doc) {
  ojson j;
  j["doc_id"] = doc.doc_id();
  j["text"] = doc.text();
  ojson sentences = ojson::array();
  for (const Sentence &s : doc.sentences()) {
    ojson sj;
    sj["index"] = s.index;
    sj["start"] = s.span.start;
    sj["end"] = s.span.end;
    ojson tokens = ojson::array();
    for (const Token &t : s.tokens) {
      ojson tj;
      tj["start"] = t.span.start;
      tj["end"] = t.span.end;
      if (t.pos) tj["pos"] = PosTagName(*t.pos);
      tokens.push_back(std::move(tj));
    }
    sj["tokens"] = std::move(tokens);
    sentences.push_back(std::move(sj));
  }
  j["sentences"] = std::move(sentences);
  ojson entities = ojson::array();
  for (const EntityMention &e : doc.entities()) {
    ojson ej;
    ej["id"] = e.id;
    ej["start"] = e.span.start;
    ej["end"] = e.span.end;
    ej["label"] = EntityClassName(e.label);
    if (e.grounding_id) ej["grounding"] = *e.grounding_id;
    ojson mutations = ojson::array();
    for (const MutationRecord &m : e.mutations) {
      ojson mj;
      mj["kind"] = MutationKindName(m.kind);
      if (m.label) mj["label"] = *m.label;
      mutations.push_back(std::move(mj));
    }
    ej["mutations"] = std::move(mutations);
    entities.push_back(std::move(ej));
  }
  j["entities"] = std::move(entities);
  ojson events = ojson::array();
  for (const EventMention &e : doc.events()) events.push_back(EventJson(e));
  j["events"] = std::move(events);
  return j;
}

ojson StringArray(const std::vector<std::string> &values) {
  ojson a = ojson::array();
  for (const std::string &v : values) a.push_back(v);
  return a;
}

ojson TraceJson(const AnaphorTrace &t) {
  ojson j;
  j["anaphor"] = t.anaphor_id;
  j["surface"] = t.surface;
  j["kind"] = t.kind;
  j["cardinality"] = t.cardinality;
  ojson attempts = ojson::array();
  for (const SieveAttempt &a : t.attempts) {
    ojson aj;
    aj["sieve"] = a.sieve;
    aj["note"] = a.note;
    ojson steps = ojson::array();
    for (const TraceStep &s : a.steps) {
      ojson sj;
      sj["mention"] = s.mention_id;
      sj["surface"] = s.surface;
      sj["accepted"] = s.accepted;
      sj["reason"] = s.reason;
      steps.push_back(std::move(sj));
    }
    aj["steps"] = std::move(steps);
    attempts.push_back(std::move(aj));
  }
  j["attempts"] = std::move(attempts);
  j["linked"] = t.linked;
  j["antecedents"] = StringArray(t.antecedent_ids);
  j["sieve"] = t.sieve;
  j["drop_reason"] = t.drop_reason;
  return j;
}

std::vector<std::string> Strings(const json &j, const char *key,
                                 const std::string &where) {
  std::vector<std::string> out;
  for (const json &v : Array(j, key, where)) {
    if (!v.is_string()) Violation(where, std::string(key) + " holds non-string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

bool Bool(const json &j, const char *key, const std::string &where) {
  const json &v = Field(j, key, where);
  if (!v.is_boolean()) Violation(where, std::string(key) + " must be boolean");
  return v.get<bool>();
}

AnaphorTrace ParseTrace(const json &j) {
  AnaphorTrace t;
  t.anaphor_id = String(j, "anaphor", "trace");
  const std::string &w = t.anaphor_id;
  t.surface = String(j, "surface", w);
  t.kind = String(j, "kind", w);
  t.cardinality = String(j, "cardinality", w);
  for (const json &a : Array(j, "attempts", w)) {
    SieveAttempt attempt;
    attempt.sieve = String(a, "sieve", w);
    attempt.note = String(a, "note", w);
    for (const json &s : Array(a, "steps", w)) {
      attempt.steps.push_back({String(s, "mention", w), String(s, "surface", w),
                               Bool(s, "accepted", w), String(s, "reason", w)});
    }
    t.attempts.push_back(std::move(attempt));
  }
  t.linked = Bool(j, "linked", w);
  t.antecedent_ids = Strings(j, "antecedents", w);
  t.sieve = String(j, "sieve", w);
  t.drop_reason = String(j, "drop_reason", w);
  return t;
}

void ValidateCompleted(const Document &doc,
                       const std::vector<CompletedEvent> &completed) {
  std::set<std::string, std::less<>> ids;
  for (const CompletedEvent &c : completed) {
    if (c.event.id.empty()) Violation(c.derived_from, "completed event without ID");
    if (!ids.insert(c.event.id).second) {
      Violation(c.event.id, "duplicate completed event ID");
    }
  }
  for (const CompletedEvent &c : completed) {
    if (doc.FindEvent(c.derived_from) == nullptr) {
      Violation(c.event.id, "derived_from " + c.derived_from +
                                " is not an event of the document");
    }
    for (const Argument &a : c.event.args) {
      if (doc.FindEntity(a.ref) == nullptr && !ids.contains(a.ref)) {
        Violation(a.ref, "dangling argument reference in completed event " +
                             c.event.id);
      }
    }
  }
}

ResultDocument ParseResult(const json &j, const ArgSchema *schema) {
  ResultDocument r;
  r.doc = ParseDocument(j, schema);
  const std::string &where = r.doc.doc_id();
  for (const json &l : Array(j, "links", where)) {
    CorefLink link;
    link.anaphor_id = String(l, "anaphor", where);
    link.antecedent_ids = Strings(l, "antecedents", link.anaphor_id);
    link.sieve_name = String(l, "sieve", link.anaphor_id);
    link.confidence_rank = SieveRank(link.sieve_name);
    ValidateLink(r.doc, link);
    r.links.push_back(std::move(link));
  }
  for (const json &e : Array(j, "completed_events", where)) {
    CompletedEvent c;
    c.event = ParseEvent(e, where + " completed event");
    c.event.complete = true;
    c.derived_from = String(e, "derived_from", c.event.id);
    if (e.contains("provenance")) {
      c.provenance = Strings(e, "provenance", c.event.id);
    }
    r.completed.push_back(std::move(c));
  }
  ValidateCompleted(r.doc, r.completed);
  if (j.contains("dropped")) {
    for (const json &d : Array(j, "dropped", where)) {
      r.dropped.push_back({String(d, "id", where), String(d, "reason", where)});
    }
  }
  if (j.contains("trace")) {
    r.has_trace = true;
    for (const json &t : Array(j, "trace", where)) {
      r.traces.push_back(ParseTrace(t));
    }
  }
  return r;
}

}  // namespace

void ValidateLink(const Document &doc, const CorefLink &link) {
  const std::string &id = link.anaphor_id;
  auto anaphor_span = doc.MentionSpan(id);
  if (!anaphor_span) Violation(id, "link anaphor is not a mention");
  if (link.antecedent_ids.empty()) Violation(id, "link without antecedents");
  if (SieveRank(link.sieve_name) == 0) {
    Violation(id, "unknown sieve " + link.sieve_name);
  }
  for (const std::string &a : link.antecedent_ids) {
    if (a == id) Violation(id, "anaphor listed as its own antecedent");
    auto span = doc.MentionSpan(a);
    if (!span) Violation(a, "link antecedent is not a mention");
    if (span->start >= anaphor_span->start) {
      Violation(a, "antecedent does not precede anaphor " + id);
    }
  }
}

Document LoadDocument(std::string_view text, const ArgSchema *schema) {
  return ParseDocument(Parse(text), schema);
}

std::vector<Document> LoadDocuments(std::string_view text,
                                    const ArgSchema *schema) {
  std::vector<Document> docs;
  for (const json &v : SplitValues(text)) {
    docs.push_back(ParseDocument(v, schema));
  }
  return docs;
}

std::string SaveDocument(const Document &doc) {
  return DocumentJson(doc).dump(2) + "\n";
}

std::string SaveResult(const ResultDocument &r) {
  for (const CorefLink &link : r.links) ValidateLink(r.doc, link);
  ValidateCompleted(r.doc, r.completed);

  ojson j = DocumentJson(r.doc);
  ojson links = ojson::array();
  for (const CorefLink &link : r.links) {
    ojson lj;
    lj["anaphor"] = link.anaphor_id;
    lj["antecedents"] = StringArray(link.antecedent_ids);
    lj["sieve"] = link.sieve_name;
    links.push_back(std::move(lj));
  }
  j["links"] = std::move(links);
  ojson completed = ojson::array();
  for (const CompletedEvent &c : r.completed) {
    ojson cj = EventJson(c.event);
    cj["derived_from"] = c.derived_from;
    cj["provenance"] = StringArray(c.provenance);
    completed.push_back(std::move(cj));
  }
  j["completed_events"] = std::move(completed);
  ojson dropped = ojson::array();
  for (const Removal &d : r.dropped) {
    ojson dj;
    dj["id"] = d.id;
    dj["reason"] = d.reason;
    dropped.push_back(std::move(dj));
  }
  j["dropped"] = std::move(dropped);
  if (r.has_trace) {
    ojson traces = ojson::array();
    for (const AnaphorTrace &t : r.traces) traces.push_back(TraceJson(t));
    j["trace"] = std::move(traces);
  }
  return j.dump(2) + "\n";
}

std::string SaveResult(const Document &doc, const std::vector<CorefLink> &links,
                       const std::vector<CompletedEvent> &completed) {
  ResultDocument r;
  r.doc = doc;
  r.links = links;
  r.completed = completed;
  return SaveResult(r);
}

ResultDocument LoadResult(std::string_view text, const ArgSchema *schema) {
  return ParseResult(Parse(text), schema);
}

std::vector<ResultDocument> LoadResults(std::string_view text,
                                        const ArgSchema *schema) {
  std::vector<ResultDocument> results;
  for (const json &v : SplitValues(text)) {
    results.push_back(ParseResult(v, schema));
  }
  return results;
}

}  // namespace biocoref
