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

#include "biocoref/search.h"

#include <algorithm>

namespace biocoref {

namespace {

void Intersect(std::optional<std::set<EntityClass>> *into,
               const std::optional<std::set<EntityClass>> &other) {
  if (!other) return;
  if (!*into) {
    *into = other;
    return;
  }
  std::set<EntityClass> both;
  for (EntityClass c : **into) {
    if (other->contains(c)) both.insert(c);
  }
  *into = std::move(both);
}

struct PoolEntry {
  Span span;
  int index;
  std::string id;
};

}  // namespace

SearchConstraints BuildConstraints(const EventMention &event,
                                   const AnaphorCandidate &anaphor,
                                   const CorefState &state,
                                   const ArgSchema &schema) {
  schema.Require(event.type);
  SearchConstraints c;
  c.need = anaphor.cardinality;
  c.required_class = anaphor.target_class;
  c.event_type = anaphor.target_event_type;
  for (const Argument &arg : event.args) {
    if (arg.ref != anaphor.mention_id) {
      c.excluded_ids.insert(arg.ref);
      continue;
    }
    if (anaphor.is_event()) continue;
    const RoleSpec *role = schema.RoleFor(event.type, arg.role);
    if (role == nullptr) continue;
    Intersect(&c.classes, std::set<EntityClass>(role->classes.begin(),
                                                role->classes.end()));
  }
  for (const std::string &id : c.excluded_ids) {
    for (std::string &m : state.ChainMembers(id)) {
      c.excluded_chain_members.insert(std::move(m));
    }
  }
  return c;
}

SearchConstraints HostConstraints(const AnaphorCandidate &anaphor,
                                  const CorefState &state,
                                  const ArgSchema &schema,
                                  const IdSet &anaphor_ids) {
  SearchConstraints merged;
  merged.need = anaphor.cardinality;
  merged.required_class = anaphor.target_class;
  merged.event_type = anaphor.target_event_type;
  for (const EventMention &event : state.doc().events()) {
    bool host = std::any_of(
        event.args.begin(), event.args.end(),
        [&](const Argument &a) { return a.ref == anaphor.mention_id; });
    if (!host) continue;
    SearchConstraints c = BuildConstraints(event, anaphor, state, schema);
    merged.excluded_ids.insert(c.excluded_ids.begin(), c.excluded_ids.end());
    merged.excluded_chain_members.insert(c.excluded_chain_members.begin(),
                                         c.excluded_chain_members.end());
    Intersect(&merged.classes, c.classes);
  }
  merged.anaphor_ids = anaphor_ids;
  return merged;
}

std::optional<std::string> RejectReason(const Document &doc,
                                        const AnaphorCandidate &anaphor,
                                        const SearchConstraints &c,
                                        std::string_view id) {
  if (id == anaphor.mention_id) return "self";
  if (c.anaphor_ids.contains(id)) return "anaphor";
  if (c.excluded_ids.contains(id)) return "participant";
  if (c.excluded_chain_members.contains(id)) return "chain-with-participant";
  if (c.claimed_ids.contains(id)) return "claimed by earlier anaphor";
  if (!c.event_type.empty()) {
    const EventMention *event = doc.FindEvent(id);
    if (event == nullptr) return "not an event";
    if (event->type != c.event_type) return "event type";
    if (!event->complete) return "incomplete event";
    return std::nullopt;
  }
  const EntityMention *entity = doc.FindEntity(id);
  if (entity == nullptr) return "not an entity";
  if (c.classes && !c.classes->contains(entity->label)) return "class filter";
  if (c.required_class && !ClassCompatible(*c.required_class, entity->label)) {
    return "class filter";
  }
  if (c.extra && !c.extra(*entity)) return c.extra_reason;
  return std::nullopt;
}

bool Satisfied(const std::vector<std::string> &ids, const Cardinality &need,
               const TokenView &view) {
  switch (need.kind) {
    case Cardinality::Kind::kOne:
      return !ids.empty();
    case Cardinality::Kind::kExactly:
      return static_cast<int>(ids.size()) == need.n;
    case Cardinality::Kind::kAtLeastTwo:
      if (ids.size() >= 2) return true;
      if (ids.size() == 1) {
        const EntityMention *e = view.doc().FindEntity(ids[0]);
        return e != nullptr && view.IsPlural(*e);
      }
      return false;
  }
  return false;
}

std::vector<std::string> LinearSearch(const TokenView &view,
                                      const AnaphorCandidate &anaphor,
                                      const SearchConstraints &c,
                                      const CorefState &state,
                                      SieveAttempt *trace) {
  const Document &doc = view.doc();
  const bool events = !c.event_type.empty();
  std::vector<std::pair<Span, std::string>> accepted;
  std::set<int> chains;
  bool done = false;

  auto pool = [&](int sentence) {
    const Span s = doc.sentences()[sentence].span;
    std::vector<PoolEntry> entries;
    if (events) {
      for (const EventMention &e : doc.events()) {
        if (s.Contains(e.trigger)) {
          entries.push_back({e.trigger, doc.MentionIndex(e.id), e.id});
        }
      }
    } else {
      for (const EntityMention &e : doc.entities()) {
        if (s.Contains(e.span)) {
          entries.push_back({e.span, doc.MentionIndex(e.id), e.id});
        }
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const PoolEntry &a, const PoolEntry &b) {
                if (a.span.start != b.span.start) {
                  return a.span.start < b.span.start;
                }
                if (a.span.end != b.span.end) return a.span.end < b.span.end;
                return a.index < b.index;
              });
    return entries;
  };

  auto surface = [&](const PoolEntry &p) {
    std::string text(doc.Slice(p.span));
    if (events) text += " [" + doc.FindEvent(p.id)->type + "]";
    return text;
  };

  auto scan = [&](int sentence, bool current) {
    for (const PoolEntry &p : pool(sentence)) {
      if (done) return;
      if (current && p.span.start >= anaphor.span.end) break;
      if (p.id == anaphor.mention_id) continue;
      auto reject = [&](const std::string &reason) {
        if (trace) trace->steps.push_back({p.id, surface(p), false, reason});
      };
      if (current && p.span.end > anaphor.span.start) {
        reject("offset");
        continue;
      }
      if (auto reason = RejectReason(doc, anaphor, c, p.id)) {
        reject(*reason);
        continue;
      }
      int chain = state.ChainOf(p.id);
      if (chains.contains(chain)) {
        reject("duplicate chain");
        continue;
      }
      chains.insert(chain);
      accepted.emplace_back(p.span, p.id);
      if (trace) trace->steps.push_back({p.id, surface(p), true, ""});
      int n = static_cast<int>(accepted.size());
      if (c.need.kind == Cardinality::Kind::kOne && n >= 1) done = true;
      if (c.need.kind == Cardinality::Kind::kExactly && n >= c.need.n) {
        done = true;
      }
    }
  };

  auto ids = [&] {
    std::vector<std::pair<Span, std::string>> sorted = accepted;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto &a, const auto &b) {
                       return a.first.start < b.first.start;
                     });
    std::vector<std::string> out;
    for (auto &[span, id] : sorted) out.push_back(id);
    return out;
  };

  int s = anaphor.sentence >= 0 ? anaphor.sentence
                                : doc.SentenceAt(anaphor.span.start);
  if (s < 0) return {};
  scan(s, true);
  if (!done && !Satisfied(ids(), c.need, view) && s > 0) scan(s - 1, false);
  return ids();
}

}  // namespace biocoref
