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

#include "biocoref/sieves.h"

#include <algorithm>
#include <functional>
#include <map>

#include "biocoref/completion.h"
#include "biocoref/errors.h"
#include "biocoref/text.h"

namespace biocoref {

namespace {

// Mutation records compared as sets.
bool SameMutations(const EntityMention &a, const EntityMention &b) {
  auto key = [](const EntityMention &e) {
    std::vector<std::pair<int, std::string>> k;
    for (const MutationRecord &m : e.mutations) {
      k.emplace_back(static_cast<int>(m.kind), m.label.value_or(""));
    }
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
  };
  return key(a) == key(b);
}

// Merges every group of non-anaphor entities sharing a key.
void MergeByKey(
    SieveContext &ctx,
    const std::function<std::optional<std::string>(const EntityMention &)>
        &key) {
  std::map<std::string, std::vector<const EntityMention *>> groups;
  for (const EntityMention &e : ctx.state.doc().entities()) {
    if (ctx.anaphor_ids.contains(e.id)) continue;
    if (auto k = key(e)) groups[*k].push_back(&e);
  }
  for (const auto &[k, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (SameMutations(*members[i], *members[j])) {
          ctx.state.Merge(members[i]->id, members[j]->id);
        }
      }
    }
  }
}

bool HasMutationLabel(const EntityMention &e, const std::string &label) {
  return std::any_of(e.mutations.begin(), e.mutations.end(),
                     [&](const MutationRecord &m) { return m.label == label; });
}

// Constraint variants tried in order for one anaphor, each with a note for
// the trace.
using Passes = std::vector<std::pair<std::string, SearchConstraints>>;
using PassesFn = std::function<Passes(const AnaphorCandidate &)>;

// First event (by trigger offset) that takes the candidate as an argument.
int FirstHost(const Document &doc, const std::string &id) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(doc.events().size()); ++i) {
    const EventMention &e = doc.events()[i];
    for (const Argument &a : e.args) {
      if (a.ref != id) continue;
      if (best < 0 || e.trigger.start < doc.events()[best].trigger.start) {
        best = i;
      }
      break;
    }
  }
  return best;
}

// Resolves the selected candidates by linear search. Anaphors sharing a host
// event are searched left to right, each excluding the antecedents found for
// the earlier ones, and then paired with the groups by text order.
void ResolveInGroups(SieveContext &ctx, const std::string &sieve,
                     const std::vector<std::size_t> &selected,
                     const PassesFn &passes) {
  const Document &doc = ctx.state.doc();
  std::vector<std::vector<std::size_t>> groups;
  std::map<int, std::size_t> by_host;
  for (std::size_t i : selected) {
    int host = FirstHost(doc, ctx.candidates[i].mention_id);
    if (host < 0) {
      groups.push_back({i});
      continue;
    }
    auto [it, fresh] = by_host.emplace(host, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }

  for (const std::vector<std::size_t> &group : groups) {
    IdSet claimed;
    std::vector<std::string> anaphors;
    std::vector<std::vector<std::string>> found;
    for (std::size_t i : group) {
      const AnaphorCandidate &a = ctx.candidates[i];
      if (ctx.state.IsResolved(a.mention_id)) continue;
      anaphors.push_back(a.mention_id);
      for (auto &[note, constraints] : passes(a)) {
        SieveAttempt *attempt = ctx.Attempt(i, sieve);
        if (attempt) attempt->note = note;
        constraints.claimed_ids = claimed;
        std::vector<std::string> ids =
            LinearSearch(ctx.view, a, constraints, ctx.state, attempt);
        if (!Satisfied(ids, a.cardinality, ctx.view)) {
          if (attempt) attempt->note += "; need " + a.cardinality.ToString() + " unmet";
          continue;
        }
        for (const std::string &id : ids) {
          for (std::string &m : ctx.state.ChainMembers(id)) {
            claimed.insert(std::move(m));
          }
        }
        found.push_back(std::move(ids));
        break;
      }
    }
    auto accepts = [&](const std::string &anaphor_id,
                       const std::vector<std::string> &ids) {
      auto it = std::find_if(
          ctx.candidates.begin(), ctx.candidates.end(),
          [&](const AnaphorCandidate &c) { return c.mention_id == anaphor_id; });
      if (!Satisfied(ids, it->cardinality, ctx.view)) return false;
      for (const auto &[note, constraints] : passes(*it)) {
        bool all = std::all_of(ids.begin(), ids.end(), [&](const std::string &id) {
          return !RejectReason(doc, *it, constraints, id);
        });
        if (all) return true;
      }
      return false;
    };
    for (Assignment &a :
         AssignMultiAnaphors(doc, anaphors, std::move(found), accepts)) {
      ctx.state.AddLink({a.anaphor_id, std::move(a.antecedent_ids), sieve,
                         SieveRank(sieve)});
    }
  }
}

std::vector<std::size_t> Select(
    const SieveContext &ctx,
    const std::function<bool(const AnaphorCandidate &)> &pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.candidates.size(); ++i) {
    const AnaphorCandidate &c = ctx.candidates[i];
    if (!ctx.state.IsResolved(c.mention_id) && pred(c)) out.push_back(i);
  }
  return out;
}

SearchConstraints Host(const SieveContext &ctx, const AnaphorCandidate &a) {
  return HostConstraints(a, ctx.state, ctx.schema(), ctx.anaphor_ids);
}

}  // namespace

IdSet ParseDisabledSieves(const std::vector<std::string> &names) {
  IdSet out;
  for (const std::string &name : names) {
    if (name == "all") {
      for (const char *s : kSieveNames) out.insert(s);
    } else if (SieveRank(name) > 0) {
      out.insert(name);
    } else {
      throw CorefError(ErrorCode::kConfig, name, "unknown sieve name");
    }
  }
  return out;
}

SieveContext::SieveContext(const TokenView &view, const ResolverConfig &config,
                           const std::vector<AnaphorCandidate> &candidates,
                           CorefState &state)
    : view(view), config(config), candidates(candidates), state(state) {
  for (const AnaphorCandidate &c : candidates) anaphor_ids.insert(c.mention_id);
  if (config.trace) {
    for (const AnaphorCandidate &c : candidates) {
      AnaphorTrace t;
      t.anaphor_id = c.mention_id;
      t.surface = std::string(view.doc().Slice(c.span));
      t.kind = AnaphorKindName(c.kind);
      if (c.mutant) t.kind += std::string("/") + MutantKindName(c.mutant->kind);
      t.cardinality = c.cardinality.ToString();
      traces.push_back(std::move(t));
    }
  }
}

SieveAttempt *SieveContext::Attempt(std::size_t candidate,
                                    std::string_view sieve) {
  if (traces.empty()) return nullptr;
  std::vector<SieveAttempt> &attempts = traces[candidate].attempts;
  attempts.push_back({std::string(sieve), "", {}});
  return &attempts.back();
}

void SieveExactString(SieveContext &ctx) {
  MergeByKey(ctx, [](const EntityMention &e) { return e.surface; });
}

void SieveSharedGrounding(SieveContext &ctx) {
  const GroundingTable *table = ctx.config.grounding;
  MergeByKey(ctx, [table](const EntityMention &e) -> std::optional<std::string> {
    if (table != nullptr) return table->Ground(e);
    return e.grounding_id;
  });
}

void SieveMutantMatch(SieveContext &ctx) {
  const Document &doc = ctx.state.doc();
  const GroundingTable *table = ctx.config.grounding;
  auto selected = Select(ctx, [](const AnaphorCandidate &c) {
    return c.mutant && c.mutant->kind == MutantKind::kProteinOnly;
  });
  ResolveInGroups(ctx, "mutant", selected, [&](const AnaphorCandidate &a) {
    const std::string protein = a.mutant->protein;
    const std::string key = GroundingTable::Normalize(protein);
    std::optional<std::string> grounded =
        table != nullptr ? table->Lookup(protein) : std::nullopt;
    SearchConstraints c = Host(ctx, a);
    const CorefState &state = ctx.state;
    c.extra = [&doc, &state, table, protein, key,
               grounded](const EntityMention &m) {
      if (!m.HasSpecifiedMutation()) return false;
      if (grounded) {
        auto g = table != nullptr ? table->Ground(m) : m.grounding_id;
        if (g == grounded) return true;
      }
      // The protein name as a component of the surface, as in K650E-FGFR3.
      std::string surface = GroundingTable::Normalize(m.surface);
      for (const std::string &part : SplitWhitespace(surface)) {
        if (part == key) return true;
      }
      for (const std::string &id : state.ChainMembers(m.id)) {
        const EntityMention *mate = doc.FindEntity(id);
        if (mate != nullptr && mate->surface == protein) return true;
      }
      return false;
    };
    c.extra_reason = "not a mutant of " + protein;
    return Passes{{"mentions of " + protein + " with a spelled-out mutation",
                   std::move(c)}};
  });
}

void SieveStrictHeadMatch(SieveContext &ctx) {
  const Document &doc = ctx.state.doc();
  const TriggerDictionary &dict = ctx.dict();
  for (std::size_t i : Select(ctx, [](const AnaphorCandidate &c) {
         return c.kind == AnaphorKind::kClassNp;
       })) {
    const AnaphorCandidate &a = ctx.candidates[i];
    SieveAttempt *attempt = ctx.Attempt(i, "strict_head");
    const Cardinality &need = a.cardinality;
    if (need.kind == Cardinality::Kind::kExactly && need.n > 1) {
      if (attempt) attempt->note = "a single antecedent cannot meet " + need.ToString();
      continue;
    }
    std::vector<std::string> content;
    for (const std::string &w : a.words) {
      if (dict.IsStopword(w) || dict.IsDeterminer(w) || IsPunctuation(w) ||
          dict.Numeral(w)) {
        continue;
      }
      content.push_back(w);
    }
    if (attempt) attempt->note = "head '" + a.head + "', nearest first";
    SearchConstraints c = Host(ctx, a);

    std::vector<const EntityMention *> pool;
    for (int s : {a.sentence, a.sentence - 1}) {
      if (s < 0) continue;
      const Span span = doc.sentences()[s].span;
      for (const EntityMention &e : doc.entities()) {
        if (!span.Contains(e.span)) continue;
        if (s == a.sentence && e.span.start >= a.span.end) continue;
        pool.push_back(&e);
      }
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const EntityMention *x, const EntityMention *y) {
                       return x->span.start > y->span.start;
                     });
    for (const EntityMention *m : pool) {
      auto reject = [&](const std::string &reason) {
        if (attempt) attempt->steps.push_back({m->id, m->surface, false, reason});
      };
      if (m->id == a.mention_id) continue;
      if (m->span.end > a.span.start) {
        reject("offset");
        continue;
      }
      if (auto reason = RejectReason(doc, a, c, m->id)) {
        reject(*reason);
        continue;
      }
      if (need.plural() && !ctx.view.IsPlural(*m)) {
        reject("number");
        continue;
      }
      std::vector<std::string> words = ctx.view.PhraseWords(*m);
      auto has = [&](const std::string &w) {
        return std::find(words.begin(), words.end(), w) != words.end();
      };
      if (!has(a.head)) {
        reject("head mismatch");
        continue;
      }
      if (!std::all_of(content.begin(), content.end(), has)) {
        reject("modifier mismatch");
        continue;
      }
      if (attempt) attempt->steps.push_back({m->id, m->surface, true, ""});
      ctx.state.AddLink({a.mention_id, {m->id}, "strict_head",
                         SieveRank("strict_head")});
      break;
    }
  }
}

void SievePronominal(SieveContext &ctx) {
  auto selected = Select(ctx, [](const AnaphorCandidate &c) {
    return c.kind == AnaphorKind::kPronoun;
  });
  ResolveInGroups(ctx, "pronominal", selected, [&](const AnaphorCandidate &a) {
    return Passes{{"linear search", Host(ctx, a)}};
  });
}

void SieveClassNp(SieveContext &ctx) {
  auto selected = Select(ctx, [](const AnaphorCandidate &c) {
    if (c.kind == AnaphorKind::kClassNp) return true;
    return c.mutant && c.mutant->kind != MutantKind::kProteinOnly;
  });
  ResolveInGroups(ctx, "class_np", selected, [&](const AnaphorCandidate &a) {
    SearchConstraints c = Host(ctx, a);
    if (a.kind == AnaphorKind::kClassNp) {
      return Passes{{"class " + std::string(EntityClassName(*a.target_class)),
                     std::move(c)}};
    }
    if (a.mutant->kind == MutantKind::kGenericMutant) {
      c.extra = [](const EntityMention &m) { return !m.mutations.empty(); };
      c.extra_reason = "no mutation";
      return Passes{{"mentions carrying a mutation", std::move(c)}};
    }
    const std::string label = *a.mutant->label;
    SearchConstraints exact = c;
    exact.extra = [label](const EntityMention &m) {
      return HasMutationLabel(m, label);
    };
    exact.extra_reason = "mutation label differs from " + label;
    // Fallback: the protein the mutation was made in, named without it.
    SearchConstraints wild = c;
    if (!wild.required_class) wild.required_class = EntityClass::kProtein;
    wild.extra = [label](const EntityMention &m) {
      for (const MutationRecord &r : m.mutations) {
        if (r.label && *r.label != label) return false;
      }
      return true;
    };
    wild.extra_reason = "carries a different mutation";
    return Passes{{"mentions with mutation " + label, std::move(exact)},
                  {"protein mentions without a conflicting mutation",
                   std::move(wild)}};
  });
}

void SieveEventCoref(SieveContext &ctx) {
  const Document &doc = ctx.state.doc();
  const ArgSchema &schema = ctx.schema();
  std::vector<std::size_t> selected;
  for (std::size_t i : Select(ctx, [](const AnaphorCandidate &c) {
         return c.kind == AnaphorKind::kNominalEvent;
       })) {
    const AnaphorCandidate &a = ctx.candidates[i];
    if (schema.IsRegulation(a.target_event_type)) {
      if (SieveAttempt *t = ctx.Attempt(i, "event_coref")) {
        t->note = "regulation-type anaphor; not searched";
      }
      continue;
    }
    bool in_regulation = std::any_of(
        doc.events().begin(), doc.events().end(), [&](const EventMention &e) {
          return schema.IsRegulation(e.type) &&
                 std::any_of(e.args.begin(), e.args.end(),
                             [&](const Argument &arg) {
                               return arg.ref == a.mention_id;
                             });
        });
    if (!in_regulation) {
      if (SieveAttempt *t = ctx.Attempt(i, "event_coref")) {
        t->note = "not an argument of a regulation";
      }
      continue;
    }
    selected.push_back(i);
  }
  ResolveInGroups(ctx, "event_coref", selected, [&](const AnaphorCandidate &a) {
    return Passes{{"complete " + a.target_event_type + " events", Host(ctx, a)}};
  });
}

void SieveCleanup(SieveContext &ctx) {
  const Document &doc = ctx.state.doc();
  IdSet removed;
  for (std::size_t i = 0; i < ctx.candidates.size(); ++i) {
    const AnaphorCandidate &a = ctx.candidates[i];
    if (ctx.state.IsResolved(a.mention_id)) continue;
    std::string reason = std::string("unresolved ") + AnaphorKindName(a.kind);
    removed.insert(a.mention_id);
    ctx.removed.push_back({a.mention_id, reason});
    if (SieveAttempt *t = ctx.Attempt(i, "cleanup")) t->note = reason;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const EventMention &e : doc.events()) {
      if (removed.contains(e.id)) continue;
      EventMention rest = e;
      std::string lost;
      std::erase_if(rest.args, [&](const Argument &a) {
        if (!removed.contains(a.ref)) return false;
        if (lost.empty()) lost = a.ref;
        return true;
      });
      if (lost.empty() || ctx.schema().IsComplete(rest)) continue;
      removed.insert(e.id);
      ctx.removed.push_back({e.id, "argument " + lost + " removed"});
      changed = true;
    }
  }
}

}  // namespace biocoref
