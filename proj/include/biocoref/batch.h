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

#ifndef BIOCOREF_BATCH_H_
#define BIOCOREF_BATCH_H_

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/pipeline.h"
#include "biocoref/standoff.h"

namespace biocoref {

struct RunConfig {
  // Paths or glob(3) patterns; each file holds one document or JSON lines.
  std::vector<std::string> inputs;
  std::string out_dir;
  // Unset paths fall back to the compiled-in defaults.
  std::optional<std::string> grounding;
  std::optional<std::string> lexicon;
  std::optional<std::string> schema;
  std::vector<std::string> disabled_sieves;
  int jobs = 1;
  bool strict = false;
  bool emit_provenance = false;
};

// Reads and parses every configured resource. Throws CorefError(kConfig).
Resources LoadResources(const RunConfig &config);

// Expands the input patterns into a sorted, de-duplicated file list. A
// pattern that matches nothing contributes no files.
std::vector<std::string> ExpandInputs(const std::vector<std::string> &patterns);

struct DocumentFailure {
  std::string input;
  std::string doc_id;
  std::string error;
};

struct RunSummary {
  int docs = 0;
  int failed = 0;
  std::vector<DocumentFailure> failures;
  int detected = 0;
  int resolved = 0;
  // Every sieve name, in pipeline order.
  std::vector<std::pair<std::string, int>> resolved_per_sieve;
  int unresolved = 0;
  int events_emitted = 0;
  int events_dropped = 0;
};

std::string SummaryJson(const RunSummary &summary);

struct RunResult {
  int exit_code = 0;
  RunSummary summary;
};

// Resolves every input document and writes <out_dir>/<doc_id>.json. Logs
// one JSON line per document and a final summary line to `log`. Throws
// CorefError(kConfig) before processing anything when configuration fails.
RunResult RunResolve(const RunConfig &config, std::ostream &log);

// Processes documents on `jobs` workers; results are in input order.
std::vector<ResultDocument> ProcessAll(const std::vector<Document> &docs,
                                       const ResolverConfig &config, int jobs);

// Human-readable search trace of one anaphor. Throws
// CorefError(kUnknownAnaphor) for an ID without a trace and
// CorefError(kMalformedInput) when the result carries no trace.
std::string InspectAnaphor(const ResultDocument &result,
                           std::string_view anaphor_id);

}  // namespace biocoref

#endif  // BIOCOREF_BATCH_H_
