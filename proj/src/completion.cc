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

#include "biocoref/completion.h"

#include <algorithm>
#include <set>

namespace biocoref {

namespace {

int Position(const Document &doc, const std::string &id) {
  std::optional<Span> span = doc.MentionSpan(id);
  return span ? span->start : -1;
}

void SortByText(const Document &doc, std::vector<std::string> &ids) {
  std::stable_sort(ids.begin(), ids.end(),
                   [&](const std::string &a, const std::string &b) {
                     return Position(doc, a) < Position(doc, b);
                   });
}

std::vector<std::string> Union(std::vector<std::string> a,
                               const std::vector<std::string> &b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

std::vector<Assignment> AssignMultiAnaphors(
    const Document &doc, std::vector<std::string> anaphors,
    std::vector<std::vector<std::string>> groups,
    const std::function<bool(const std::string &,
                             const std::vector<std::string> &)> &accepts) {
  SortByText(doc, anaphors);
  for (std::vector<std::string> &g : groups) SortByText(doc, g);
  std::erase_if(groups, [](const auto &g) { return g.empty(); });
  std::stable_sort(groups.begin(), groups.end(),
                   [&](const auto &a, const auto &b) {
                     return Position(doc, a.front()) < Position(doc, b.front());
                   });
  std::vector<Assignment> out;
  for (std::size_t i = 0; i < anaphors.size() && i < groups.size(); ++i) {
    if (accepts && !accepts(anaphors[i], groups[i])) continue;
    out.push_back({anaphors[i], groups[i]});
  }
  return out;
}

std::vector<CompletedEvent> SubstituteAndSplit(const EventMention &event,
                                               const SubstitutionMap &subs,
                                               const CorefState &state,
                                               const ArgSchema &schema,
                                               std::string *failure) {
  auto fail = [&](const std::string &reason) {
    if (failure != nullptr) *failure = reason;
    return std::vector<CompletedEvent>{};
  };
  std::vector<std::vector<Substitute>> expanded(event.args.size());
  EventMention shape = event;
  shape.args.clear();
  for (std::size_t i = 0; i < event.args.size(); ++i) {
    auto it = subs.find(event.args[i].ref);
    if (it == subs.end()) {
      expanded[i] = {{event.args[i].ref, {}}};
    } else {
      expanded[i] = it->second;
    }
    if (!expanded[i].empty()) shape.args.push_back(event.args[i]);
  }
  if (!schema.IsComplete(shape)) {
    return fail("IncompleteAfterSubstitution");
  }

  // Each slot offers the union of its arguments' substitutes.
  struct Choice {
    std::string role;
    Substitute sub;
  };
  std::vector<std::vector<Choice>> slots;
  for (const ArgSlot &slot : schema.Slots(event)) {
    std::vector<Choice> choices;
    for (std::size_t i : slot.args) {
      for (const Substitute &s : expanded[i]) {
        choices.push_back({event.args[i].role, s});
      }
    }
    if (!choices.empty()) slots.push_back(std::move(choices));
  }

  const Document &doc = state.doc();
  std::vector<std::vector<Choice>> products{{}};
  for (const std::vector<Choice> &slot : slots) {
    std::vector<std::vector<Choice>> next;
    for (const std::vector<Choice> &partial : products) {
      for (const Choice &c : slot) {
        bool clash = std::any_of(
            partial.begin(), partial.end(), [&](const Choice &p) {
              if (p.sub.id == c.sub.id) return true;
              return doc.FindEntity(p.sub.id) != nullptr &&
                     doc.FindEntity(c.sub.id) != nullptr &&
                     state.SameChain(p.sub.id, c.sub.id);
            });
        if (clash) continue;
        next.push_back(partial);
        next.back().push_back(c);
      }
    }
    products = std::move(next);
  }
  if (products.empty()) return fail("SelfRelation");

  std::vector<CompletedEvent> out;
  for (std::size_t k = 0; k < products.size(); ++k) {
    CompletedEvent child;
    child.event = event;
    child.event.args.clear();
    if (products.size() > 1) child.event.id += "." + std::to_string(k + 1);
    for (const Choice &c : products[k]) {
      child.event.args.push_back({c.role, c.sub.id});
      child.provenance = Union(std::move(child.provenance), c.sub.provenance);
    }
    child.event.complete = true;
    child.derived_from = event.id;
    out.push_back(std::move(child));
  }
  return out;
}

Completion CompleteEvents(const Document &doc, const CorefState &state,
                          const std::vector<AnaphorCandidate> &candidates,
                          const IdSet &removed, const ArgSchema &schema) {
  std::map<std::string, const AnaphorCandidate *, std::less<>> anaphors;
  for (const AnaphorCandidate &c : candidates) anaphors[c.mention_id] = &c;

  enum class Mark { kNone, kActive, kDone };
  std::map<std::string, Mark, std::less<>> marks;
  std::map<std::string, std::vector<CompletedEvent>, std::less<>> done;
  Completion result;

  std::function<const std::vector<CompletedEvent> &(const EventMention &)>
      complete;
  auto children_of = [&](std::string_view id,
                         const std::vector<std::string> &extra) {
    std::vector<Substitute> out;
    const EventMention *e = doc.FindEvent(id);
    if (e == nullptr) return out;
    if (marks[e->id] == Mark::kActive) return out;
    for (const CompletedEvent &c : complete(*e)) {
      out.push_back({c.event.id, Union(c.provenance, extra)});
    }
    return out;
  };

  complete = [&](const EventMention &event)
      -> const std::vector<CompletedEvent> & {
    if (marks[event.id] == Mark::kDone) return done[event.id];
    marks[event.id] = Mark::kActive;
    std::vector<CompletedEvent> children;
    if (!anaphors.contains(event.id) && !removed.contains(event.id)) {
      SubstitutionMap subs;
      for (const Argument &a : event.args) {
        if (subs.contains(a.ref)) continue;
        std::vector<Substitute> &s = subs[a.ref];
        if (removed.contains(a.ref)) continue;
        auto it = anaphors.find(a.ref);
        const CorefLink *link = state.LinkFor(a.ref);
        if (it != anaphors.end()) {
          if (link == nullptr) continue;
          if (it->second->is_event()) {
            for (const std::string &ante : link->antecedent_ids) {
              for (Substitute &c : children_of(ante, {a.ref})) {
                s.push_back(std::move(c));
              }
            }
          } else {
            for (const std::string &ante : link->antecedent_ids) {
              s.push_back({ante, {a.ref}});
            }
          }
        } else if (doc.FindEvent(a.ref) != nullptr) {
          s = children_of(a.ref, {});
        } else {
          s.push_back({a.ref, {}});
        }
      }
      std::string failure;
      children = SubstituteAndSplit(event, subs, state, schema, &failure);
      if (children.empty()) result.dropped.push_back({event.id, failure});
    }
    marks[event.id] = Mark::kDone;
    return done[event.id] = std::move(children);
  };

  for (const EventMention &e : doc.events()) complete(e);
  std::stable_sort(result.dropped.begin(), result.dropped.end(),
                   [&](const Removal &a, const Removal &b) {
                     return doc.MentionIndex(a.id) < doc.MentionIndex(b.id);
                   });
  for (const EventMention &e : doc.events()) {
    for (const CompletedEvent &c : done[e.id]) result.events.push_back(c);
  }
  return result;
}

}  // namespace biocoref
