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

#include "biocoref/pipeline.h"

#include "biocoref/default_config.h"

namespace biocoref {

namespace {

using SieveFn = void (*)(SieveContext &);

constexpr SieveFn kSieves[kSieveCount] = {
    SieveExactString, SieveSharedGrounding, SieveMutantMatch,
    SieveStrictHeadMatch, SievePronominal, SieveClassNp,
    SieveEventCoref, SieveCleanup,
};

}  // namespace

Resources Resources::Defaults() {
  return {TriggerDictionary::FromJson(kDefaultLexicon),
          ArgSchema::FromJson(kDefaultSchema),
          GroundingTable::FromTsv(kDefaultGrounding)};
}

ResolverConfig Resources::Config(IdSet disabled, bool trace) const {
  return {&dict, &schema, &grounding, std::move(disabled), trace};
}

Resolution Resolve(const Document &doc, const ResolverConfig &config,
                   const SieveObserver &observer) {
  TokenView view(doc, *config.dict);
  Resolution result{CorefState(doc), DetectCandidates(view), {}, {}};
  SieveContext ctx(view, config, result.candidates, result.state);
  for (int i = 0; i < kSieveCount; ++i) {
    if (config.disabled.contains(kSieveNames[i])) continue;
    result.state.set_sieve_cursor(i + 1);
    kSieves[i](ctx);
    if (observer) observer(kSieveNames[i], result.state);
  }
  result.removed = std::move(ctx.removed);
  result.traces = std::move(ctx.traces);
  for (AnaphorTrace &t : result.traces) {
    if (const CorefLink *link = result.state.LinkFor(t.anaphor_id)) {
      t.linked = true;
      t.antecedent_ids = link->antecedent_ids;
      t.sieve = link->sieve_name;
      continue;
    }
    for (const Removal &r : result.removed) {
      if (r.id == t.anaphor_id) t.drop_reason = r.reason;
    }
    if (t.drop_reason.empty()) t.drop_reason = "no antecedent";
  }
  return result;
}

ResultDocument Process(const Document &doc, const ResolverConfig &config,
                       const SieveObserver &observer) {
  Resolution r = Resolve(doc, config, observer);
  IdSet removed;
  for (const Removal &x : r.removed) removed.insert(x.id);
  Completion completion =
      CompleteEvents(doc, r.state, r.candidates, removed, *config.schema);
  ResultDocument out{doc, r.state.links(), std::move(completion.events),
                     std::move(r.removed), config.trace, std::move(r.traces)};
  for (Removal &x : completion.dropped) out.dropped.push_back(std::move(x));
  return out;
}

}  // namespace biocoref
