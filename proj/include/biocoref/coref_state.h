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

#ifndef BIOCOREF_COREF_STATE_H_
#define BIOCOREF_COREF_STATE_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "biocoref/document.h"
#include "biocoref/types.h"

namespace biocoref {

// Coreference chains and links of one document under resolution. Chains are
// a union-find partition of the mention IDs; the representative of a chain is
// its member with the smallest mention index, so chain identity does not
// depend on merge order.
class CorefState {
 public:
  explicit CorefState(const Document &doc);

  const Document &doc() const { return *doc_; }

  // Mention index of the chain representative, or -1 for unknown IDs.
  int ChainOf(std::string_view id) const;
  bool SameChain(std::string_view a, std::string_view b) const;

  // IDs in the chain of a mention, in mention index order.
  std::vector<std::string> ChainMembers(std::string_view id) const;

  // Chains with more than one member, ordered by representative.
  std::vector<std::vector<std::string>> Chains() const;

  void Merge(std::string_view a, std::string_view b);

  // Records the link and merges the anaphor with its antecedents. Throws
  // std::logic_error when the anaphor is already resolved.
  void AddLink(CorefLink link);

  bool IsResolved(std::string_view anaphor_id) const;
  const std::vector<CorefLink> &links() const { return links_; }
  const CorefLink *LinkFor(std::string_view anaphor_id) const;

  // Pipeline position of the sieve currently running.
  int sieve_cursor() const { return cursor_; }
  void set_sieve_cursor(int cursor) { cursor_ = cursor; }

 private:
  int Find(int index) const;

  const Document *doc_;
  std::vector<int> parent_;
  std::vector<CorefLink> links_;
  std::set<std::string, std::less<>> resolved_;
  int cursor_ = 0;
};

}  // namespace biocoref

#endif  // BIOCOREF_COREF_STATE_H_
