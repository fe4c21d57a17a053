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

#ifndef SQIIS_TAG_SET_H_
#define SQIIS_TAG_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sqiis/registry.h"

namespace sqiis {

// Binary membership vector over a tag registry. Bit i is tag position i.
// Width is the registry size; two sets are equal only if their widths and
// bits agree.
class TagSet {
 public:
  TagSet() = default;
  explicit TagSet(size_t width) : width_(width) { CheckWidth(); }
  TagSet(size_t width, uint64_t bits);
  TagSet(size_t width, std::initializer_list<size_t> positions);

  size_t width() const { return width_; }
  uint64_t bits() const { return bits_; }

  bool empty() const { return bits_ == 0; }
  size_t count() const { return static_cast<size_t>(std::popcount(bits_)); }
  bool contains(size_t position) const {
    return position < width_ && ((bits_ >> position) & 1u) != 0;
  }

  TagSet &set(size_t position);
  TagSet &reset(size_t position);

  // Ascending tag positions.
  std::vector<size_t> positions() const;

  TagSet operator|(const TagSet &other) const;

  bool operator==(const TagSet &other) const = default;

  // "category+address" style, ids joined in registry order. Empty set
  // renders as "".
  std::string ToString(const TagRegistry &tags) const;
  // "{1,0,0,0,1,0,0}" membership vector.
  std::string ToBitString() const;

 private:
  void CheckWidth() const;

  size_t width_ = 0;
  uint64_t bits_ = 0;
};

// Parses a '+'-joined tag-id list. Throws UnknownIdentifier for ids not in
// the registry, MalformedConfig for an empty list or a repeated id.
TagSet ParseTagSet(std::string_view joined, const TagRegistry &tags);

}  // namespace sqiis

template <>
struct std::hash<sqiis::TagSet> {
  size_t operator()(const sqiis::TagSet &s) const noexcept {
    return std::hash<uint64_t>()(s.bits() * 0x9E3779B97F4A7C15ull ^
                                 s.width());
  }
};

#endif  // SQIIS_TAG_SET_H_
