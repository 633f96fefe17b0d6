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

#ifndef BIOCOREF_PIPELINE_H_
#define BIOCOREF_PIPELINE_H_

#include <functional>
#include <string_view>
#include <vector>

#include "biocoref/completion.h"
#include "biocoref/coref_state.h"
#include "biocoref/grounding.h"
#include "biocoref/lexicon.h"
#include "biocoref/mentions.h"
#include "biocoref/schema.h"
#include "biocoref/sieves.h"
#include "biocoref/standoff.h"

namespace biocoref {

// Lexicon, schema, and grounding table shared by every document of a run.
struct Resources {
  TriggerDictionary dict;
  ArgSchema schema;
  GroundingTable grounding;

  // The configuration compiled in from config/.
  static Resources Defaults();
  ResolverConfig Config(IdSet disabled = {}, bool trace = false) const;
};

// Called after each sieve that ran, with its name and the state it left.
using SieveObserver =
    std::function<void(std::string_view sieve, const CorefState &state)>;

struct Resolution {
  CorefState state;
  std::vector<AnaphorCandidate> candidates;
  std::vector<Removal> removed;
  std::vector<AnaphorTrace> traces;
};

// Detection followed by the enabled sieves in pipeline order.
Resolution Resolve(const Document &doc, const ResolverConfig &config,
                   const SieveObserver &observer = {});

// Resolution plus event completion. Dropped holds clean-up removals followed
// by events lost in completion.
ResultDocument Process(const Document &doc, const ResolverConfig &config,
                       const SieveObserver &observer = {});

}  // namespace biocoref

#endif  // BIOCOREF_PIPELINE_H_
