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

#include "sqiis/tagger.h"

#include <algorithm>
#include <unordered_set>

#include "sqiis/error.h"

namespace sqiis {

TaggedQuery TokenizeAndTag(std::string_view query, const LexiconSet &lex) {
  std::vector<std::string> words = NormalizeWords(query);
  if (words.empty()) {
    throw Error(ErrorCode::kEmptyQuery, "query has no words");
  }

  TaggedQuery out{std::string(query), {}};
  size_t pos = 0;
  while (pos < words.size()) {
    size_t longest = std::min(lex.max_phrase_words(), words.size() - pos);
    TaggedToken token{words[pos], pos, 1, TagSet(lex.tag_count())};
    for (size_t n = longest; n >= 1; --n) {
      std::string gram = words[pos];
      for (size_t k = 1; k < n; ++k) {
        gram += ' ';
        gram += words[pos + k];
      }
      TagSet hit = lex.LookupNormalized(gram);
      if (!hit.empty()) {
        token = TaggedToken{std::move(gram), pos, n, hit};
        break;
      }
    }
    pos += token.word_count;
    out.tokens.push_back(std::move(token));
  }
  return out;
}

std::vector<TagSet> CandidateTagSets(const TaggedQuery &query,
                                     size_t tag_count, size_t cap) {
  if (cap == 0) throw Error(ErrorCode::kRangeError, "candidate cap is 0");

  // Prefix unions are deduplicated as they grow. Keeping only the first
  // prefix that reaches a given union preserves first-seen order of the
  // full product, since any later duplicate prefix has the same extensions.
  std::vector<TagSet> unions{TagSet(tag_count)};
  bool any_tag = false;
  for (const TaggedToken &token : query.tokens) {
    if (token.tags.empty()) continue;
    any_tag = true;
    std::vector<size_t> choices = token.tags.positions();
    std::vector<TagSet> next;
    std::unordered_set<TagSet> seen;
    for (const TagSet &prefix : unions) {
      for (size_t tag : choices) {
        TagSet u = prefix;
        u.set(tag);
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    unions = std::move(next);
  }
  if (!any_tag) {
    throw Error(ErrorCode::kNoTagsFound, "no token carries a tag");
  }
  if (unions.size() > cap) unions.resize(cap);
  return unions;
}

}  // namespace sqiis
