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

#include "sqiis/exclusion_set.h"

#include <algorithm>

#include <fmt/format.h>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {

void ExclusionSet::Add(size_t a, size_t b) {
  if (a == b) {
    throw Error(ErrorCode::kMalformedConfig,
                fmt::format("tag {} cannot exclude itself", a));
  }
  std::pair<size_t, size_t> p = std::minmax(a, b);
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it != pairs_.end() && *it == p) return;
  pairs_.insert(it, p);
}

bool ExclusionSet::IsValid(const TagSet &combination) const {
  for (const auto &[a, b] : pairs_) {
    if (combination.contains(a) && combination.contains(b)) return false;
  }
  return true;
}

void AddExclusionFields(const TagRegistry &tags, std::string_view a,
                        std::string_view b, ExclusionSet &out) {
  auto pa = tags.Find(Trim(a));
  auto pb = tags.Find(Trim(b));
  if (!pa || !pb) {
    throw Error(ErrorCode::kUnknownIdentifier,
                fmt::format("unknown tag in exclusion '{}'/'{}'", a, b));
  }
  out.Add(*pa, *pb);
}

ExclusionSet LoadExclusions(const TagRegistry &tags, std::string_view text) {
  ExclusionSet out;
  for (const ConfigLine &line : ParseConfigLines(text)) {
    if (line.fields.size() != 3 || Trim(line.fields[0]) != "exclude") {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: expected exclude<TAB>tag<TAB>tag",
                              line.number));
    }
    AddExclusionFields(tags, line.fields[1], line.fields[2], out);
  }
  return out;
}

std::string SerializeExclusions(const TagRegistry &tags,
                                const ExclusionSet &exclusions) {
  std::string out;
  for (const auto &[a, b] : exclusions.pairs()) {
    out += fmt::format("exclude\t{}\t{}\n", tags.id(a), tags.id(b));
  }
  return out;
}

}  // namespace sqiis
