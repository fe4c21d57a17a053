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

#ifndef SQIIS_TAGGER_H_
#define SQIIS_TAGGER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sqiis/lexicon.h"
#include "sqiis/tag_set.h"

namespace sqiis {

inline constexpr size_t kDefaultCandidateCap = 64;

struct TaggedToken {
  std::string surface;  // normalized words joined by spaces
  size_t start_word = 0;
  size_t word_count = 1;
  TagSet tags;  // empty when the token matched no lexicon

  bool operator==(const TaggedToken &) const = default;
};

struct TaggedQuery {
  std::string raw;
  std::vector<TaggedToken> tokens;  // left to right, covering every word

  bool operator==(const TaggedQuery &) const = default;
};

// Greedy longest-match n-gram segmentation. At each word position tries
// spans from min(max_phrase_words, remaining) words down to 1; the first span
// with a lexicon hit becomes a token carrying all of its tags. A word with
// no hit at any length becomes a one-word token with no tags.
// Throws EmptyQuery if the query has no words after normalization.
TaggedQuery TokenizeAndTag(std::string_view query, const LexiconSet &lex);

// Projects a tagged query to the tag combinations it could stand for.
// Untagged tokens are ignored; each multi-tagged token contributes one of
// its tags, and every choice vector is unioned into one TagSet. Output is in
// first-seen order of the mixed-radix product (first token most
// significant, tags in registry order), deduplicated and truncated to
// `cap` entries. Throws NoTagsFound if no token carries a tag and
// RangeError if cap is 0.
std::vector<TagSet> CandidateTagSets(const TaggedQuery &query,
                                     size_t tag_count,
                                     size_t cap = kDefaultCandidateCap);

}  // namespace sqiis

#endif  // SQIIS_TAGGER_H_
