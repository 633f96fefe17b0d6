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

#ifndef BIOCOREF_TRACE_H_
#define BIOCOREF_TRACE_H_

#include <string>
#include <vector>

namespace biocoref {

// One mention considered during an antecedent search.
struct TraceStep {
  std::string mention_id;
  std::string surface;
  bool accepted = false;
  // Rejection reason, e.g. "participant" or "chain-with-participant".
  std::string reason;

  friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

// What one sieve did with one anaphor.
struct SieveAttempt {
  std::string sieve;
  std::string note;
  std::vector<TraceStep> steps;

  friend bool operator==(const SieveAttempt &, const SieveAttempt &) = default;
};

// Resolution history of one anaphor candidate.
struct AnaphorTrace {
  std::string anaphor_id;
  std::string surface;
  std::string kind;
  std::string cardinality;
  std::vector<SieveAttempt> attempts;
  bool linked = false;
  std::vector<std::string> antecedent_ids;
  std::string sieve;
  std::string drop_reason;

  friend bool operator==(const AnaphorTrace &, const AnaphorTrace &) = default;
};

}  // namespace biocoref

#endif  // BIOCOREF_TRACE_H_
