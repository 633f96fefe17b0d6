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

#include "biocoref/schema.h"

#include <algorithm>
#include <json.hpp>

#include "biocoref/errors.h"

namespace biocoref {

namespace {

using json = nlohmann::json;

// Splits "theme2" into ("theme", "2"). The suffix is empty when absent.
std::pair<std::string_view, std::string_view> SplitSlotSuffix(
    std::string_view role) {
  std::size_t end = role.size();
  while (end > 0 && role[end - 1] >= '0' && role[end - 1] <= '9') --end;
  if (end == 0) return {role, {}};
  return {role.substr(0, end), role.substr(end)};
}

RoleSpec ParseRole(const std::string &type, const std::string &name,
                   const json &j) {
  if (!j.is_object()) {
    throw CorefError(ErrorCode::kConfig, type + "." + name,
                     "role spec must be an object");
  }
  RoleSpec role;
  role.name = name;
  if (j.contains("classes")) {
    for (const json &c : j.at("classes")) {
      if (!c.is_string()) {
        throw CorefError(ErrorCode::kConfig, type + "." + name,
                         "class names must be strings");
      }
      auto cls = ParseEntityClass(c.get<std::string>());
      if (!cls) {
        throw CorefError(ErrorCode::kConfig, type + "." + name,
                         "unknown entity class " + c.get<std::string>());
      }
      role.classes.push_back(*cls);
    }
  }
  role.accepts_events = j.value("events", false);
  role.count = j.value("count", 1);
  role.optional = j.value("optional", false);
  if (role.count < 1) {
    throw CorefError(ErrorCode::kConfig, type + "." + name,
                     "count must be positive");
  }
  return role;
}

}  // namespace

bool RoleSpec::Accepts(EntityClass cls) const {
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

const RoleSpec *EventTypeSpec::FindRole(std::string_view name) const {
  for (const RoleSpec &role : roles) {
    if (role.name == name) return &role;
  }
  return nullptr;
}

ArgSchema ArgSchema::FromJson(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception &e) {
    throw CorefError(ErrorCode::kConfig, "schema", e.what());
  }
  if (!root.is_object()) {
    throw CorefError(ErrorCode::kConfig, "schema", "top level must be object");
  }
  ArgSchema schema;
  for (const auto &[type, row] : root.items()) {
    if (!row.is_object()) {
      throw CorefError(ErrorCode::kConfig, type, "row must be an object");
    }
    EventTypeSpec spec;
    spec.type = type;
    for (const auto &[key, value] : row.items()) {
      if (key == "_regulation") {
        spec.regulation = value.get<bool>();
      } else {
        spec.roles.push_back(ParseRole(type, key, value));
      }
    }
    if (spec.roles.empty()) {
      throw CorefError(ErrorCode::kConfig, type, "event type has no roles");
    }
    schema.types_.emplace(type, std::move(spec));
  }
  return schema;
}

const EventTypeSpec *ArgSchema::Find(std::string_view type) const {
  auto it = types_.find(type);
  return it == types_.end() ? nullptr : &it->second;
}

const EventTypeSpec &ArgSchema::Require(std::string_view type) const {
  const EventTypeSpec *spec = Find(type);
  if (spec == nullptr) {
    throw CorefError(ErrorCode::kSchemaMissing, std::string(type),
                     "no argument schema for event type");
  }
  return *spec;
}

bool ArgSchema::IsRegulation(std::string_view type) const {
  const EventTypeSpec *spec = Find(type);
  return spec != nullptr && spec->regulation;
}

const RoleSpec *ArgSchema::RoleFor(std::string_view type,
                                   std::string_view role) const {
  const EventTypeSpec *spec = Find(type);
  if (spec == nullptr) return nullptr;
  if (const RoleSpec *exact = spec->FindRole(role)) return exact;
  auto [base, suffix] = SplitSlotSuffix(role);
  if (suffix.empty()) return nullptr;
  return spec->FindRole(base);
}

std::vector<ArgSlot> ArgSchema::Slots(const EventMention &event) const {
  std::vector<ArgSlot> slots;
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < event.args.size(); ++i) {
    const std::string &role = event.args[i].role;
    const RoleSpec *spec = RoleFor(event.type, role);
    std::string name;
    std::string key;
    if (spec == nullptr) {
      name = role;
      key = "?" + std::to_string(i);
    } else {
      name = spec->name;
      auto [base, suffix] = SplitSlotSuffix(role);
      if (role != spec->name && !suffix.empty()) {
        key = name + "#" + std::string(suffix);
      } else if (spec->count == 1) {
        key = name + "#";
      } else {
        key = name + "@" + std::to_string(i);
      }
    }
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      slots.push_back({name, {i}});
    } else {
      slots[it - keys.begin()].args.push_back(i);
    }
  }
  return slots;
}

bool ArgSchema::IsComplete(const EventMention &event) const {
  const EventTypeSpec *spec = Find(event.type);
  if (spec == nullptr) return false;
  std::vector<ArgSlot> slots = Slots(event);
  for (const ArgSlot &slot : slots) {
    if (spec->FindRole(slot.role) == nullptr) return false;
  }
  for (const RoleSpec &role : spec->roles) {
    int n = static_cast<int>(std::count_if(
        slots.begin(), slots.end(),
        [&](const ArgSlot &s) { return s.role == role.name; }));
    if (role.optional ? n > role.count : n != role.count) return false;
  }
  return true;
}

std::vector<std::string> ArgSchema::types() const {
  std::vector<std::string> names;
  for (const auto &[name, spec] : types_) names.push_back(name);
  return names;
}

}  // namespace biocoref
