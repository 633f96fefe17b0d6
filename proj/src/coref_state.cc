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

#include "biocoref/coref_state.h"

#include <map>
#include <numeric>
#include <stdexcept>

namespace biocoref {

CorefState::CorefState(const Document &doc)
    : doc_(&doc), parent_(doc.mention_count()) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int CorefState::Find(int index) const {
  while (parent_[index] != index) index = parent_[index];
  return index;
}

int CorefState::ChainOf(std::string_view id) const {
  int i = doc_->MentionIndex(id);
  return i < 0 ? -1 : Find(i);
}

bool CorefState::SameChain(std::string_view a, std::string_view b) const {
  int ra = ChainOf(a);
  return ra >= 0 && ra == ChainOf(b);
}

std::vector<std::string> CorefState::ChainMembers(std::string_view id) const {
  std::vector<std::string> members;
  int root = ChainOf(id);
  if (root < 0) return members;
  for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
    if (Find(i) == root) members.push_back(doc_->MentionId(i));
  }
  return members;
}

std::vector<std::vector<std::string>> CorefState::Chains() const {
  std::map<int, std::vector<std::string>> by_root;
  for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
    by_root[Find(i)].push_back(doc_->MentionId(i));
  }
  std::vector<std::vector<std::string>> chains;
  for (auto &[root, members] : by_root) {
    if (members.size() > 1) chains.push_back(std::move(members));
  }
  return chains;
}

void CorefState::Merge(std::string_view a, std::string_view b) {
  int ra = ChainOf(a);
  int rb = ChainOf(b);
  if (ra < 0 || rb < 0) {
    throw std::logic_error("merge of unknown mention");
  }
  if (ra == rb) return;
  if (ra < rb) {
    parent_[rb] = ra;
  } else {
    parent_[ra] = rb;
  }
}

void CorefState::AddLink(CorefLink link) {
  if (IsResolved(link.anaphor_id)) {
    throw std::logic_error("anaphor " + link.anaphor_id +
                           " is already resolved");
  }
  for (const std::string &a : link.antecedent_ids) Merge(link.anaphor_id, a);
  resolved_.insert(link.anaphor_id);
  links_.push_back(std::move(link));
}

bool CorefState::IsResolved(std::string_view anaphor_id) const {
  return resolved_.contains(anaphor_id);
}

const CorefLink *CorefState::LinkFor(std::string_view anaphor_id) const {
  for (const CorefLink &l : links_) {
    if (l.anaphor_id == anaphor_id) return &l;
  }
  return nullptr;
}

}  // namespace biocoref
