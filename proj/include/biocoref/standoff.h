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

#ifndef BIOCOREF_STANDOFF_H_
#define BIOCOREF_STANDOFF_H_

#include <string>
#include <string_view>
#include <vector>

#include "biocoref/document.h"
#include "biocoref/schema.h"
#include "biocoref/trace.h"
#include "biocoref/types.h"

namespace biocoref {

// A resolved document as written by save_result.
struct ResultDocument {
  Document doc;
  std::vector<CorefLink> links;
  std::vector<CompletedEvent> completed;
  std::vector<Removal> dropped;
  // Search traces are serialized only when has_trace is set.
  bool has_trace = false;
  std::vector<AnaphorTrace> traces;

  friend bool operator==(const ResultDocument &,
                         const ResultDocument &) = default;
};

// Parses one standoff JSON document. Throws CorefError(kMalformedInput) for
// bad JSON and CorefError(kSchemaViolation) for structural problems.
Document LoadDocument(std::string_view json, const ArgSchema *schema = nullptr);

// Parses a file holding one document, a JSON array of documents, or
// newline-delimited documents.
std::vector<Document> LoadDocuments(std::string_view text,
                                    const ArgSchema *schema = nullptr);

// Input-format JSON of a document, without result fields.
std::string SaveDocument(const Document &doc);

// Serializes a result. Links and completed events are checked against the
// document first; invalid ones raise CorefError(kSchemaViolation). The output
// is deterministic: equal inputs give byte-identical JSON.
std::string SaveResult(const ResultDocument &result);
std::string SaveResult(const Document &doc, const std::vector<CorefLink> &links,
                       const std::vector<CompletedEvent> &completed);

// Parses the output of SaveResult.
ResultDocument LoadResult(std::string_view json,
                          const ArgSchema *schema = nullptr);

// Parses one result, an array of results, or newline-delimited results.
std::vector<ResultDocument> LoadResults(std::string_view text,
                                        const ArgSchema *schema = nullptr);

// Checks link invariants against the document: non-empty antecedents, known
// IDs, anaphor not among its antecedents, no cataphora, known sieve name.
void ValidateLink(const Document &doc, const CorefLink &link);

}  // namespace biocoref

#endif  // BIOCOREF_STANDOFF_H_
