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

#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "oracles.h"
#include "sqiis/reference_config.h"

namespace sqiis {
namespace {

using fixtures::CodeOf;

constexpr size_t kAddress = 0, kCategory = 1, kProperName = 2,
                 kMovieTitle = 3, kPerformerName = 4;

TEST_CASE("Chinese restaurant in Andheri") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  TaggedQuery tq = TokenizeAndTag("Chinese restaurant in Andheri", lex);
  REQUIRE(tq.tokens.size() == 4);
  CHECK(tq.tokens[1].surface == "restaurant");
  CHECK(tq.tokens[1].tags == TagSet(7, {kCategory}));
  CHECK(tq.tokens[2].surface == "in");
  CHECK(tq.tokens[2].tags.empty());
  CHECK(tq.tokens[3].surface == "andheri");
  CHECK(tq.tokens[3].tags == TagSet(7, {kAddress}));

  std::vector<TagSet> cands = CandidateTagSets(tq, 7);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0] == TagSet(7, {kCategory, kAddress}));
}

TEST_CASE("two-word title becomes one token") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  TaggedQuery tq = TokenizeAndTag("slumdog millionaire", lex);
  REQUIRE(tq.tokens.size() == 1);
  CHECK(tq.tokens[0].surface == "slumdog millionaire");
  CHECK(tq.tokens[0].start_word == 0);
  CHECK(tq.tokens[0].word_count == 2);
  CHECK(tq.tokens[0].tags == TagSet(7, {kMovieTitle}));
}

TEST_CASE("total miss yields one untagged token") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  TaggedQuery tq = TokenizeAndTag("qwerty", lex);
  REQUIRE(tq.tokens.size() == 1);
  CHECK(tq.tokens[0].tags.empty());
  CHECK(CodeOf([&] { CandidateTagSets(tq, 7); }) == ErrorCode::kNoTagsFound);
}

TEST_CASE("empty query") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  CHECK(CodeOf([&] { TokenizeAndTag("", lex); }) == ErrorCode::kEmptyQuery);
  CHECK(CodeOf([&] { TokenizeAndTag("  \t ", lex); }) ==
        ErrorCode::kEmptyQuery);
  CHECK(CodeOf([&] { TokenizeAndTag(" ?! ", lex); }) ==
        ErrorCode::kEmptyQuery);
}

TEST_CASE("longest match wins over shorter prefixes") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  // "how to reach" (3 words) must beat "to" (1 word).
  TaggedQuery tq = TokenizeAndTag("how to reach juhu", lex);
  REQUIRE(tq.tokens.size() == 2);
  CHECK(tq.tokens[0].surface == "how to reach");
  CHECK(tq.tokens[0].word_count == 3);
  // "music director" beats "director".
  tq = TokenizeAndTag("music director of lagaan", lex);
  CHECK(tq.tokens[0].surface == "music director");
}

TEST_CASE("ambiguous token expands to one candidate per tag") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  TaggedQuery tq = TokenizeAndTag("Amitabh Bachchan Andheri", lex);
  REQUIRE(tq.tokens.size() == 2);
  CHECK(tq.tokens[0].tags == TagSet(7, {kProperName, kPerformerName}));
  std::vector<TagSet> cands = CandidateTagSets(tq, 7);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0] == TagSet(7, {kProperName, kAddress}));
  CHECK(cands[1] == TagSet(7, {kPerformerName, kAddress}));
}

TEST_CASE("candidate cap truncates and rejects zero") {
  TaggedQuery tq;
  tq.tokens.push_back({"a", 0, 1, TagSet(7, {0, 1, 2})});
  tq.tokens.push_back({"b", 1, 1, TagSet(7, {3, 4})});
  CHECK(CandidateTagSets(tq, 7).size() == 6);
  std::vector<TagSet> two = CandidateTagSets(tq, 7, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == TagSet(7, {0, 3}));
  CHECK(two[1] == TagSet(7, {0, 4}));
  CHECK(CodeOf([&] { CandidateTagSets(tq, 7, 0); }) ==
        ErrorCode::kRangeError);
}

TEST_CASE("duplicate unions collapse") {
  TaggedQuery tq;
  tq.tokens.push_back({"a", 0, 1, TagSet(4, {0, 1})});
  tq.tokens.push_back({"b", 1, 1, TagSet(4, {0, 1})});
  std::vector<TagSet> cands = CandidateTagSets(tq, 4);
  // (0,0)->{0}, (0,1)->{0,1}, (1,0)->{0,1} dup, (1,1)->{1}
  REQUIRE(cands.size() == 3);
  CHECK(cands[0] == TagSet(4, {0}));
  CHECK(cands[1] == TagSet(4, {0, 1}));
  CHECK(cands[2] == TagSet(4, {1}));
}

TEST_CASE("candidate order matches a naive odometer") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n = 2 + rng() % 6;
    TaggedQuery tq;
    std::vector<std::vector<int>> choices;
    int tokens = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < tokens; ++t) {
      TagSet tags(n);
      if (rng() % 4 != 0) {
        int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) tags.set(rng() % n);
      }
      tq.tokens.push_back({"w", static_cast<size_t>(t), 1, tags});
      if (!tags.empty()) {
        std::vector<int> c;
        for (size_t p : tags.positions()) c.push_back(static_cast<int>(p));
        choices.push_back(c);
      }
    }
    if (choices.empty()) continue;
    std::vector<uint64_t> expected = oracle::OdometerUnions(choices);
    std::vector<TagSet> got = CandidateTagSets(tq, n, 1000);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].bits() == expected[i]);
  }
}

TEST_CASE("segmentation covers every word once, left to right") {
  LexiconSet lex = LoadReferenceSystem().lexicons;
  std::vector<std::string> vocab = {
      "slumdog", "millionaire", "way", "to", "andheri", "how", "reach",
      "music",   "director",    "in",  "s",  "v",       "road", "zz"};
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::string q;
    size_t words = 1 + rng() % 8;
    for (size_t i = 0; i < words; ++i) q += vocab[rng() % vocab.size()] + " ";
    TaggedQuery tq = TokenizeAndTag(q, lex);
    size_t next = 0;
    for (const TaggedToken &t : tq.tokens) {
      CHECK(t.start_word == next);
      CHECK(t.word_count >= 1);
      CHECK(t.tags == lex.Lookup(t.surface));
      next += t.word_count;
    }
    CHECK(next == words);
    CHECK(TokenizeAndTag(q, lex) == tq);
  }
}

TEST_CASE("longest-match dominance") {
  Registries reg = LoadReferenceSystem().registries;
  LexiconSet lex = LoadLexicons(reg.tags,
                                "address\ta\n"
                                "address\ta b c\n"
                                "category\tb c\n");
  TaggedQuery tq = TokenizeAndTag("a b c", lex);
  REQUIRE(tq.tokens.size() == 1);
  CHECK(tq.tokens[0].word_count == 3);
  tq = TokenizeAndTag("a b c d", lex);
  CHECK(tq.tokens[0].surface == "a b c");
  tq = TokenizeAndTag("x a b", lex);
  REQUIRE(tq.tokens.size() == 3);
  CHECK(tq.tokens[1].surface == "a");
}

}  // namespace
}  // namespace sqiis
