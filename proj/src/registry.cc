// Copyright 2026 The sqiis Authors.
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

#include "sqiis/registry.h"

#include <fmt/format.h>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {

bool IsValidIdentifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

template <typename Kind>
IdRegistry<Kind>::IdRegistry(std::vector<RegistryEntry> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    const std::string &id = entries_[i].id;
    if (!IsValidIdentifier(id)) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("invalid identifier '{}'", id));
    }
    if (!index_.emplace(id, i).second) {
      throw Error(ErrorCode::kDuplicateIdentifier,
                  fmt::format("identifier '{}' listed twice", id));
    }
  }
}

template <typename Kind>
std::optional<size_t> IdRegistry<Kind>::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <typename Kind>
bool IdRegistry<Kind>::operator==(const IdRegistry &other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].id != other.entries_[i].id ||
        entries_[i].description != other.entries_[i].description) {
      return false;
    }
  }
  return true;
}

template class IdRegistry<TagKind>;
template class IdRegistry<DomainKind>;

Registries LoadRegistries(std::string_view config_text) {
  enum class Section { kNone, kTags, kDomains };
  Section section = Section::kNone;
  std::vector<RegistryEntry> tags;
  std::vector<RegistryEntry> domains;

  for (const ConfigLine &line : ParseConfigLines(config_text)) {
    std::string_view head = Trim(line.fields[0]);
    if (line.fields.size() == 1 && head == "[tags]") {
      section = Section::kTags;
      continue;
    }
    if (line.fields.size() == 1 && head == "[domains]") {
      section = Section::kDomains;
      continue;
    }
    if (section == Section::kNone) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: entry outside [tags]/[domains]",
                              line.number));
    }
    if (line.fields.size() > 2) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: expected <id><TAB><description>",
                              line.number));
    }
    RegistryEntry entry{std::string(head),
                        line.fields.size() == 2
                            ? std::string(Trim(line.fields[1]))
                            : std::string()};
    if (entry.id.empty()) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: empty identifier", line.number));
    }
    (section == Section::kTags ? tags : domains).push_back(std::move(entry));
  }

  if (tags.empty() || domains.empty()) {
    throw Error(ErrorCode::kMalformedConfig,
                "registry needs at least one tag and one domain");
  }
  if (tags.size() > kMaxTags) {
    throw Error(ErrorCode::kMalformedConfig,
                fmt::format("{} tags exceeds the limit of {}", tags.size(),
                            kMaxTags));
  }
  for (const RegistryEntry &d : domains) {
    if (d.id == kNoDomainLabel) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("'{}' is reserved", kNoDomainLabel));
    }
  }
  return Registries{TagRegistry(std::move(tags)),
                    DomainRegistry(std::move(domains))};
}

std::string SerializeRegistries(const Registries &registries) {
  std::string out = "[tags]\n";
  for (const RegistryEntry &e : registries.tags.entries()) {
    out += fmt::format("{}\t{}\n", e.id, e.description);
  }
  out += "\n[domains]\n";
  for (const RegistryEntry &e : registries.domains.entries()) {
    out += fmt::format("{}\t{}\n", e.id, e.description);
  }
  return out;
}

}  // namespace sqiis
