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

#ifndef BIOCOREF_GROUNDING_H_
#define BIOCOREF_GROUNDING_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/types.h"

namespace biocoref {

// Namespace order used when one alias maps to several IDs. Namespaces not in
// the list rank after all listed ones.
std::vector<std::string> DefaultNamespacePriority();

// Alias to canonical ID table. Lookups are exact on the normalized alias;
// there is no prefix or substring matching, so "glycogen" never grounds
// through "glycogen synthase kinase 3 beta". Immutable after loading.
class GroundingTable {
 public:
  GroundingTable() = default;

  // Reads TSV rows "alias<TAB>canonical_id[<TAB>namespace]" without a header.
  // Without a namespace column the namespace is the ID prefix before ':'.
  // Throws CorefError(kMalformedRow) naming the 1-based line number.
  static GroundingTable FromTsv(
      std::string_view tsv,
      std::vector<std::string> priority = DefaultNamespacePriority());

  // NFKC, lowercase, then runs of whitespace and hyphens collapsed to one
  // space, trimmed. Idempotent.
  static std::string Normalize(std::string_view surface);

  std::optional<std::string> Lookup(std::string_view surface) const;

  // The mention's own grounding ID when present, else a table lookup.
  std::optional<std::string> Ground(const EntityMention &mention) const;

  std::size_t size() const { return entries_.size(); }
  // Rows discarded because their alias was already present.
  int dropped_duplicates() const { return dropped_; }

 private:
  struct Entry {
    std::string id;
    int rank = 0;
  };

  int Rank(std::string_view ns) const;

  std::vector<std::string> priority_;
  std::map<std::string, Entry, std::less<>> entries_;
  int dropped_ = 0;
};

}  // namespace biocoref

#endif  // BIOCOREF_GROUNDING_H_
