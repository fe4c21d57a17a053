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

#include "sqiis/classifier.h"

#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "sqiis/reference_config.h"

namespace sqiis {
namespace {

using fixtures::CodeOf;

TEST_CASE("select_domain") {
  auto a = SelectDomain({0.75, 0.25, 0});
  REQUIRE(a);
  CHECK(a->domain == 0);
  CHECK(a->confidence == 0.75);
  CHECK_FALSE(SelectDomain({0, 0, 0}));
  auto tie = SelectDomain({0.5, 0.5, 0});
  REQUIRE(tie);
  CHECK(tie->domain == 0);
  CHECK(tie->confidence == 0.5);
  // Within 1e-12 still counts as a tie.
  CHECK(SelectDomain({0.5, 0.5 + 1e-13, 0})->domain == 0);
  CHECK(SelectDomain({0.5, 0.5 + 1e-9, 0})->domain == 1);
}

TEST_CASE("example queries with both reference rule bases") {
  ReferenceSystem ref = LoadReferenceSystem();
  for (const RuleBase *rb : {&ref.handcrafted, &ref.system_generated}) {
    ClassificationResult yp =
        Classify("Chinese restaurant in Andheri", ref.lexicons, *rb);
    REQUIRE(yp.has_domain());
    CHECK(ref.registries.domains.id(yp.choice->domain) == "yellow_pages");
    CHECK(yp.fired_combination == TagSet(7, {0, 1}));

    ClassificationResult mv =
        Classify("Slumdog Millionaire in Andheri", ref.lexicons, *rb);
    REQUIRE(mv.has_domain());
    CHECK(ref.registries.domains.id(mv.choice->domain) == "movie");
  }
}

TEST_CASE("no-domain reasons") {
  ReferenceSystem ref = LoadReferenceSystem();
  ClassificationResult none = Classify("qwerty asdf", ref.lexicons,
                                       ref.handcrafted);
  CHECK_FALSE(none.has_domain());
  CHECK(none.reason == NoDomainReason::kNoTags);
  CHECK(none.tagged.tokens.size() == 2);

  // category + movie_title is excluded, so the hand-crafted base has no rule.
  ClassificationResult no_rule =
      Classify("sholay theater", ref.lexicons, ref.handcrafted);
  CHECK_FALSE(no_rule.has_domain());
  CHECK(no_rule.reason == NoDomainReason::kNoRule);
  REQUIRE(no_rule.candidates.size() == 1);
  CHECK_FALSE(no_rule.candidates[0].fired);

  // direction_word + movie_title is labeled NO_DOMAIN.
  ClassificationResult zero =
      Classify("way to sholay", ref.lexicons, ref.handcrafted);
  CHECK_FALSE(zero.has_domain());
  CHECK(zero.reason == NoDomainReason::kZeroConfidence);

  CHECK(CodeOf([&] { Classify("   ", ref.lexicons, ref.handcrafted); }) ==
        ErrorCode::kEmptyQuery);
}

TEST_CASE("the strongest fired candidate wins, earlier on ties") {
  Registries reg = LoadRegistries(fixtures::kSmallRegistry);
  LexiconSet lex = LoadLexicons(reg.tags, "a\tfoo\nb\tfoo\nc\tbar\n");
  // Candidates in order: {a,c}, {b,c}.
  RuleBase rb = LoadRuleBase(reg,
                             "mode\tsystem-generated\n"
                             "rule\ta+c\tx:0.6 y:0.4\n"
                             "rule\tb+c\tz:0.9 y:0.1\n");
  ClassificationResult r = Classify("foo bar", lex, rb);
  REQUIRE(r.has_domain());
  CHECK(r.choice->domain == 2);
  CHECK(r.choice->confidence == doctest::Approx(0.9));
  CHECK(r.fired_combination == TagSet(3, {1, 2}));
  CHECK(r.candidates.size() == 2);

  RuleBase tied = LoadRuleBase(reg,
                               "mode\tsystem-generated\n"
                               "rule\ta+c\tx:0.6 y:0.4\n"
                               "rule\tb+c\tz:0.6 y:0.4\n");
  ClassificationResult t = Classify("foo bar", lex, tied);
  CHECK(t.choice->domain == 0);
  CHECK(t.fired_combination == TagSet(3, {0, 2}));
}

TEST_CASE("domain confidence equals the fired vector maximum") {
  ReferenceSystem ref = LoadReferenceSystem();
  std::vector<std::string> words = {"restaurant", "andheri", "sholay",
                                    "actor",      "from",    "kajol",
                                    "taj",        "aamir khan", "zz"};
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    std::string q;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) {
      q += words[rng() % words.size()] + " ";
    }
    ClassificationResult r = Classify(q, ref.lexicons, ref.system_generated);
    if (!r.has_domain()) continue;
    auto fired = ref.system_generated.Fire(r.fired_combination);
    REQUIRE(fired);
    CHECK(r.choice->confidence == fired->Max());
    CHECK(r.choice->confidence > 0.0);
    ClassificationResult again =
        Classify(q, ref.lexicons, ref.system_generated);
    CHECK(again.choice == r.choice);
    CHECK(again.tagged == r.tagged);
  }
}

TEST_CASE("argmax survives positive rescaling before normalization") {
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    ConfidenceVector raw{u(rng), u(rng), u(rng)};
    double lambda = std::pow(10.0, u(rng) * 4 - 2);
    ConfidenceVector scaled{raw[0] * lambda, raw[1] * lambda, raw[2] * lambda};
    auto a = SelectDomain(Normalize(raw));
    auto b = SelectDomain(Normalize(scaled));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->domain == b->domain);
  }
}

}  // namespace
}  // namespace sqiis
