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

#include "sqiis/tag_set.h"

#include <fmt/format.h>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {

TagSet::TagSet(size_t width, uint64_t bits) : width_(width), bits_(bits) {
  CheckWidth();
  if (width_ < 64 && (bits_ >> width_) != 0) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("bits set beyond width {}", width_));
  }
}

TagSet::TagSet(size_t width, std::initializer_list<size_t> positions)
    : width_(width) {
  CheckWidth();
  for (size_t p : positions) set(p);
}

void TagSet::CheckWidth() const {
  if (width_ > kMaxTags) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("tag set width {} exceeds {}", width_, kMaxTags));
  }
}

TagSet &TagSet::set(size_t position) {
  if (position >= width_) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("tag position {} outside width {}", position,
                            width_));
  }
  bits_ |= uint64_t{1} << position;
  return *this;
}

TagSet &TagSet::reset(size_t position) {
  if (position >= width_) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("tag position {} outside width {}", position,
                            width_));
  }
  bits_ &= ~(uint64_t{1} << position);
  return *this;
}

std::vector<size_t> TagSet::positions() const {
  std::vector<size_t> out;
  out.reserve(count());
  for (uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<size_t>(std::countr_zero(b)));
  }
  return out;
}

TagSet TagSet::operator|(const TagSet &other) const {
  if (width_ != other.width_) {
    throw Error(ErrorCode::kDimensionError,
                fmt::format("tag set widths {} and {} differ", width_,
                            other.width_));
  }
  return TagSet(width_, bits_ | other.bits_);
}

std::string TagSet::ToString(const TagRegistry &tags) const {
  std::string out;
  for (size_t p : positions()) {
    if (!out.empty()) out += '+';
    out += tags.id(p);
  }
  return out;
}

std::string TagSet::ToBitString() const {
  std::string out = "{";
  for (size_t i = 0; i < width_; ++i) {
    if (i) out += ',';
    out += contains(i) ? '1' : '0';
  }
  out += '}';
  return out;
}

TagSet ParseTagSet(std::string_view joined, const TagRegistry &tags) {
  TagSet out(tags.size());
  joined = Trim(joined);
  if (joined.empty()) {
    throw Error(ErrorCode::kMalformedConfig, "empty tag combination");
  }
  size_t start = 0;
  while (start <= joined.size()) {
    size_t plus = joined.find('+', start);
    if (plus == std::string_view::npos) plus = joined.size();
    std::string_view id = Trim(joined.substr(start, plus - start));
    auto pos = tags.Find(id);
    if (!pos) {
      throw Error(ErrorCode::kUnknownIdentifier,
                  fmt::format("unknown tag '{}'", id));
    }
    if (out.contains(*pos)) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("tag '{}' repeated in '{}'", id, joined));
    }
    out.set(*pos);
    start = plus + 1;
  }
  return out;
}

}  // namespace sqiis
