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

#include "biocoref/grounding.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "biocoref/errors.h"
#include "biocoref/text.h"

namespace biocoref {

namespace {

bool IsSeparator(UChar32 c) {
  switch (c) {
    case '-':
    case 0x2010:  // hyphen
    case 0x2011:  // non-breaking hyphen
    case 0x2012:  // figure dash
    case 0x2013:  // en dash
    case 0x2212:  // minus sign
      return true;
    default:
      return u_isUWhiteSpace(c);
  }
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(pos));
      return cols;
    }
    cols.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

}  // namespace

std::vector<std::string> DefaultNamespacePriority() {
  return {"uniprot", "hgnc", "chebi", "go", "pfam", "interpro"};
}

std::string GroundingTable::Normalize(std::string_view surface) {
  std::string folded = NormalizeNfkc(ToLower(NormalizeNfkc(surface)));
  std::string out;
  out.reserve(folded.size());
  bool pending = false;
  int32_t i = 0;
  const int32_t length = static_cast<int32_t>(folded.size());
  while (i < length) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(folded.data(), i, length, c);
    if (IsSeparator(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.append(folded, start, i - start);
  }
  return out;
}

int GroundingTable::Rank(std::string_view ns) const {
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (priority_[i] == ns) return static_cast<int>(i);
  }
  return static_cast<int>(priority_.size());
}

GroundingTable GroundingTable::FromTsv(std::string_view tsv,
                                       std::vector<std::string> priority) {
  GroundingTable table;
  table.priority_ = std::move(priority);
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < tsv.size()) {
    std::size_t nl = tsv.find('\n', pos);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = tsv.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string_view> cols = SplitTabs(line);
    const std::string where = "line " + std::to_string(line_no);
    if (cols.size() < 2 || cols.size() > 3) {
      throw CorefError(ErrorCode::kMalformedRow, where,
                       "expected 2 or 3 tab-separated columns, got " +
                           std::to_string(cols.size()));
    }
    if (cols[0].empty() || cols[1].empty()) {
      throw CorefError(ErrorCode::kMalformedRow, where, "empty alias or ID");
    }
    std::string ns;
    if (cols.size() == 3 && !cols[2].empty()) {
      ns = std::string(cols[2]);
    } else {
      std::size_t colon = cols[1].find(':');
      if (colon != std::string_view::npos) ns = cols[1].substr(0, colon);
    }
    std::string key;
    try {
      key = Normalize(cols[0]);
    } catch (const CorefError &e) {
      throw CorefError(ErrorCode::kMalformedRow, where, "invalid UTF-8");
    }
    if (key.empty()) {
      throw CorefError(ErrorCode::kMalformedRow, where, "alias normalizes to empty");
    }
    Entry entry{std::string(cols[1]), table.Rank(ToLower(ns))};
    auto [it, inserted] = table.entries_.emplace(key, entry);
    if (!inserted) {
      ++table.dropped_;
      if (entry.rank < it->second.rank) it->second = std::move(entry);
    }
  }
  return table;
}

std::optional<std::string> GroundingTable::Lookup(
    std::string_view surface) const {
  auto it = entries_.find(Normalize(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second.id;
}

std::optional<std::string> GroundingTable::Ground(
    const EntityMention &mention) const {
  if (mention.grounding_id) return mention.grounding_id;
  return Lookup(mention.surface);
}

}  // namespace biocoref
