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

#ifndef SQIIS_LEXICON_H_
#define SQIIS_LEXICON_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sqiis/registry.h"
#include "sqiis/tag_set.h"

namespace sqiis {

// Lowercases ASCII, splits on whitespace and strips leading/trailing
// .,!?;:'" from each word. Words that strip to nothing are dropped.
std::vector<std::string> NormalizeWords(std::string_view text);

// NormalizeWords joined by single spaces.
std::string NormalizePhrase(std::string_view text);

// One lookup table per tag, stored inverted as phrase -> tags. A phrase may
// be listed under several tags.
class LexiconSet {
 public:
  explicit LexiconSet(size_t tag_count) : tag_count_(tag_count) {}

  // `phrase` is normalized first. Throws MalformedConfig if it is empty
  // after normalization.
  void Add(size_t tag, std::string_view phrase);

  // Tags whose table contains the normalized phrase; empty on a miss.
  TagSet Lookup(std::string_view phrase) const;
  // Same, for a phrase already in normalized form.
  TagSet LookupNormalized(const std::string &normalized) const;

  size_t tag_count() const { return tag_count_; }
  size_t max_phrase_words() const { return max_phrase_words_; }
  size_t phrase_count() const { return phrases_.size(); }

  // Sorted phrases stored under `tag`.
  std::vector<std::string> PhrasesFor(size_t tag) const;

 private:
  size_t tag_count_;
  size_t max_phrase_words_ = 1;
  std::unordered_map<std::string, TagSet> phrases_;
};

// Lines of `<tag-id><TAB><phrase>`. Throws UnknownTag / MalformedConfig.
LexiconSet LoadLexicons(const TagRegistry &tags, std::string_view text);

}  // namespace sqiis

#endif  // SQIIS_LEXICON_H_
