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

#include "biocoref/types.h"

#include <array>
#include <utility>

namespace biocoref {

namespace {

template <typename E, std::size_t N>
std::optional<E> Lookup(const std::array<std::pair<const char *, E>, N> &table,
                        std::string_view name) {
  for (const auto &[key, value] : table) {
    if (name == key) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
const char *NameOf(const std::array<std::pair<const char *, E>, N> &table,
                   E value) {
  for (const auto &[key, v] : table) {
    if (v == value) return key;
  }
  return "???";
}

constexpr std::array<std::pair<const char *, EntityClass>, 7> kEntityClasses{{
    {"Protein", EntityClass::kProtein},
    {"Gene", EntityClass::kGene},
    {"GeneOrGeneProduct", EntityClass::kGeneOrGeneProduct},
    {"Family", EntityClass::kFamily},
    {"SimpleChemical", EntityClass::kSimpleChemical},
    {"CellularComponent", EntityClass::kCellularComponent},
    {"Site", EntityClass::kSite},
}};

constexpr std::array<std::pair<const char *, MutationKind>, 5> kMutationKinds{{
    {"PointSubstitution", MutationKind::kPointSubstitution},
    {"Deletion", MutationKind::kDeletion},
    {"Truncation", MutationKind::kTruncation},
    {"Insertion", MutationKind::kInsertion},
    {"UnknownMutation", MutationKind::kUnknownMutation},
}};

constexpr std::array<std::pair<const char *, Polarity>, 3> kPolarities{{
    {"Unspecified", Polarity::kUnspecified},
    {"Positive", Polarity::kPositive},
    {"Negative", Polarity::kNegative},
}};

constexpr std::array<std::pair<const char *, PosTag>, 6> kPosTags{{
    {"DET", PosTag::kDet},
    {"PRON", PosTag::kPron},
    {"NOUN", PosTag::kNoun},
    {"ADJ", PosTag::kAdj},
    {"NUM", PosTag::kNum},
    {"OTHER", PosTag::kOther},
}};

}  // namespace

const char *EntityClassName(EntityClass cls) {
  return NameOf(kEntityClasses, cls);
}

std::optional<EntityClass> ParseEntityClass(std::string_view name) {
  return Lookup(kEntityClasses, name);
}

bool ClassCompatible(EntityClass required, EntityClass label) {
  using C = EntityClass;
  switch (required) {
    case C::kProtein:
    case C::kFamily:
      return label == C::kProtein || label == C::kFamily ||
             label == C::kGeneOrGeneProduct;
    case C::kGene:
      return label == C::kGene || label == C::kGeneOrGeneProduct;
    case C::kGeneOrGeneProduct:
      return label == C::kProtein || label == C::kGene ||
             label == C::kGeneOrGeneProduct;
    default:
      return label == required;
  }
}

const char *MutationKindName(MutationKind kind) {
  return NameOf(kMutationKinds, kind);
}

std::optional<MutationKind> ParseMutationKind(std::string_view name) {
  return Lookup(kMutationKinds, name);
}

bool IsPointSubstitutionLabel(std::string_view label) {
  // ^[A-Z]\d+[A-Z]$
  if (label.size() < 3) return false;
  auto upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  if (!upper(label.front()) || !upper(label.back())) return false;
  for (std::size_t i = 1; i + 1 < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') return false;
  }
  return true;
}

const char *PolarityName(Polarity polarity) {
  return NameOf(kPolarities, polarity);
}

std::optional<Polarity> ParsePolarity(std::string_view name) {
  return Lookup(kPolarities, name);
}

const char *PosTagName(PosTag tag) { return NameOf(kPosTags, tag); }

std::optional<PosTag> ParsePosTag(std::string_view name) {
  return Lookup(kPosTags, name);
}

bool EntityMention::HasSpecifiedMutation() const {
  for (const MutationRecord &m : mutations) {
    if (m.specified()) return true;
  }
  return false;
}

std::string Cardinality::ToString() const {
  switch (kind) {
    case Kind::kOne: return "One";
    case Kind::kAtLeastTwo: return "AtLeastTwo";
    case Kind::kExactly: return "Exactly(" + std::to_string(n) + ")";
  }
  return "???";
}

int SieveRank(std::string_view name) {
  for (int i = 0; i < kSieveCount; ++i) {
    if (name == kSieveNames[i]) return i + 1;
  }
  return 0;
}

}  // namespace biocoref
