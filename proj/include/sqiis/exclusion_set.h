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

#ifndef SQIIS_EXCLUSION_SET_H_
#define SQIIS_EXCLUSION_SET_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqiis/registry.h"
#include "sqiis/tag_set.h"

namespace sqiis {

// Unordered tag pairs that may not co-occur in one combination.
class ExclusionSet {
 public:
  // Stores (min, max). Throws MalformedConfig for a self pair. Repeats are
  // ignored.
  void Add(size_t a, size_t b);

  // False iff `combination` holds both members of some pair.
  bool IsValid(const TagSet &combination) const;

  const std::vector<std::pair<size_t, size_t>> &pairs() const {
    return pairs_;
  }
  bool empty() const { return pairs_.empty(); }

  bool operator==(const ExclusionSet &) const = default;

 private:
  std::vector<std::pair<size_t, size_t>> pairs_;  // sorted
};

// Parses one `exclude<TAB><tag-id><TAB><tag-id>` line's fields (without the
// keyword) into `out`.
void AddExclusionFields(const TagRegistry &tags, std::string_view a,
                        std::string_view b, ExclusionSet &out);

// File made only of `exclude` lines.
ExclusionSet LoadExclusions(const TagRegistry &tags, std::string_view text);

// `exclude` lines, one per pair, in sorted pair order.
std::string SerializeExclusions(const TagRegistry &tags,
                                const ExclusionSet &exclusions);

}  // namespace sqiis

#endif  // SQIIS_EXCLUSION_SET_H_
