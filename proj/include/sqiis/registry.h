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

#ifndef SQIIS_REGISTRY_H_
#define SQIIS_REGISTRY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sqiis {

struct RegistryEntry {
  std::string id;
  std::string description;
};

// Closed, ordered universe of identifiers. Position i always maps to the
// same id; rule bit vectors and confidence vectors are indexed by position.
// The Kind parameter only keeps tag and domain registries apart at compile
// time.
template <typename Kind>
class IdRegistry {
 public:
  IdRegistry() = default;
  // Throws DuplicateIdentifier or MalformedConfig.
  explicit IdRegistry(std::vector<RegistryEntry> entries);

  size_t size() const { return entries_.size(); }
  const std::vector<RegistryEntry> &entries() const { return entries_; }
  const std::string &id(size_t position) const {
    return entries_.at(position).id;
  }
  const std::string &description(size_t position) const {
    return entries_.at(position).description;
  }

  std::optional<size_t> Find(std::string_view id) const;

  bool operator==(const IdRegistry &other) const;

 private:
  std::vector<RegistryEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

struct TagKind {};
struct DomainKind {};

using TagRegistry = IdRegistry<TagKind>;
using DomainRegistry = IdRegistry<DomainKind>;

// The one sentinel that may never be used as a domain id.
inline constexpr std::string_view kNoDomainLabel = "NO_DOMAIN";

// Most tags a registry may hold (TagSet is a 64-bit mask).
inline constexpr size_t kMaxTags = 64;

struct Registries {
  TagRegistry tags;
  DomainRegistry domains;
};

// Parses the `[tags]` / `[domains]` section file. Ids must be ASCII
// [A-Za-z0-9_]+; both sections must be non-empty.
Registries LoadRegistries(std::string_view config_text);

std::string SerializeRegistries(const Registries &registries);

bool IsValidIdentifier(std::string_view id);

}  // namespace sqiis

#endif  // SQIIS_REGISTRY_H_
