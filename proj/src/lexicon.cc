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

#include "sqiis/lexicon.h"

#include <algorithm>

#include <fmt/format.h>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsEdgePunct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':': case '\'':
    case '"':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<std::string> NormalizeWords(std::string_view text) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    std::string_view word = text.substr(start, i - start);
    while (!word.empty() && IsEdgePunct(word.front())) word.remove_prefix(1);
    while (!word.empty() && IsEdgePunct(word.back())) word.remove_suffix(1);
    if (word.empty()) continue;
    std::string lowered(word);
    for (char &c : lowered) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    words.push_back(std::move(lowered));
  }
  return words;
}

std::string NormalizePhrase(std::string_view text) {
  std::string out;
  for (const std::string &w : NormalizeWords(text)) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void LexiconSet::Add(size_t tag, std::string_view phrase) {
  if (tag >= tag_count_) {
    throw Error(ErrorCode::kUnknownTag,
                fmt::format("tag position {} outside registry", tag));
  }
  std::vector<std::string> words = NormalizeWords(phrase);
  if (words.empty()) {
    throw Error(ErrorCode::kMalformedConfig,
                fmt::format("phrase '{}' is empty after normalization",
                            phrase));
  }
  std::string key = NormalizePhrase(phrase);
  auto [it, inserted] = phrases_.try_emplace(key, TagSet(tag_count_));
  it->second.set(tag);
  max_phrase_words_ = std::max(max_phrase_words_, words.size());
}

TagSet LexiconSet::Lookup(std::string_view phrase) const {
  return LookupNormalized(NormalizePhrase(phrase));
}

TagSet LexiconSet::LookupNormalized(const std::string &normalized) const {
  auto it = phrases_.find(normalized);
  if (it == phrases_.end()) return TagSet(tag_count_);
  return it->second;
}

std::vector<std::string> LexiconSet::PhrasesFor(size_t tag) const {
  std::vector<std::string> out;
  for (const auto &[phrase, tags] : phrases_) {
    if (tags.contains(tag)) out.push_back(phrase);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LexiconSet LoadLexicons(const TagRegistry &tags, std::string_view text) {
  LexiconSet lex(tags.size());
  for (const ConfigLine &line : ParseConfigLines(text)) {
    if (line.fields.size() != 2) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: expected <tag-id><TAB><phrase>",
                              line.number));
    }
    std::string_view id = Trim(line.fields[0]);
    auto tag = tags.Find(id);
    if (!tag) {
      throw Error(ErrorCode::kUnknownTag,
                  fmt::format("line {}: unknown tag '{}'", line.number, id));
    }
    try {
      lex.Add(*tag, line.fields[1]);
    } catch (const Error &e) {
      throw Error(e.code(), fmt::format("line {}: {}", line.number,
                                        e.detail()));
    }
  }
  return lex;
}

}  // namespace sqiis
