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

#include "sqiis/rulebase.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.h"
#include "sqiis/reference_config.h"

namespace sqiis {
namespace {

using fixtures::CodeOf;

TEST_CASE("illustrated rule table loads and fires") {
  RuleBase rb = fixtures::FiveTagRuleBase();
  REQUIRE(rb.rules().size() == 2);
  CHECK(rb.mode() == RuleBaseMode::kSystemGenerated);

  auto first = rb.Fire(TagSet(5, {0, 3}));
  REQUIRE(first);
  CHECK((*first)[0] == doctest::Approx(0.75));
  CHECK((*first)[1] == doctest::Approx(0.25));

  auto second = rb.Fire(TagSet(5, {1, 4}));
  REQUIRE(second);
  CHECK((*second)[0] == doctest::Approx(0.45));
  CHECK((*second)[1] == doctest::Approx(0.55));

  CHECK_FALSE(rb.Fire(TagSet(5, {0})));
  CHECK_FALSE(rb.Fire(TagSet(5, {0, 3, 4})));  // superset does not fire
}

TEST_CASE("firing an empty tag set is an error") {
  RuleBase rb = fixtures::FiveTagRuleBase();
  CHECK(CodeOf([&] { rb.Fire(TagSet(5)); }) == ErrorCode::kEmptyTagSet);
}

TEST_CASE("load errors") {
  Registries reg = fixtures::FiveTagRegistries();
  CHECK(CodeOf([&] {
          LoadRuleBase(reg,
                       "mode\tsystem-generated\n"
                       "rule\tt1+t4\tD1:0.75 D2:0.25\n"
                       "rule\tt4+t1\tD1:0.5 D2:0.5\n");
        }) == ErrorCode::kDuplicateRule);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\thand-crafted\nrule\tt1\tD1:1.5\n");
        }) == ErrorCode::kInvalidConfidence);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\thand-crafted\nrule\tt1\tD1:-0.1\n");
        }) == ErrorCode::kInvalidConfidence);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\thand-crafted\nrule\tt1\tD1:0.5 D2:0.5\n");
        }) == ErrorCode::kModeViolation);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\tsystem-generated\nrule\tt1\tD1:0.5\n");
        }) == ErrorCode::kModeViolation);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\thand-crafted\nrule\tt9\tD1:1\n");
        }) == ErrorCode::kUnknownIdentifier);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\thand-crafted\nrule\tt1\tD7:1\n");
        }) == ErrorCode::kUnknownIdentifier);
  CHECK(CodeOf([&] { LoadRuleBase(reg, "rule\tt1\tD1:1\n"); }) ==
        ErrorCode::kMalformedConfig);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg, "mode\tguesswork\nrule\tt1\tD1:1\n");
        }) == ErrorCode::kMalformedConfig);
  CHECK(CodeOf([&] {
          LoadRuleBase(reg,
                       "mode\tsystem-generated\nexclude\tt1\tt2\n"
                       "rule\tt1+t2\tD1:1\n");
        }) == ErrorCode::kExcludedCombination);
}

TEST_CASE("omitted domains default to zero") {
  Registries reg = fixtures::FiveTagRegistries();
  RuleBase rb = LoadRuleBase(reg, "mode\thand-crafted\nrule\tt3\tD2:1\n");
  CHECK(*rb.Fire(TagSet(5, {2})) == ConfidenceVector{0.0, 1.0});
}

TEST_CASE("validate: one-hot hand-crafted base is clean") {
  RuleBase rb(RuleBaseMode::kHandCrafted, 3, 3,
              {{TagSet(3, {0}), {1, 0, 0}},
               {TagSet(3, {1}), {0, 0, 1}},
               {TagSet(3, {0, 1}), {0, 0, 0}}});
  CHECK(Validate(rb).empty());
}

TEST_CASE("validate: hand-crafted non one-hot vector") {
  RuleBase rb(RuleBaseMode::kHandCrafted, 3, 3,
              {{TagSet(3, {0}), {0.5, 0.5, 0}}});
  std::vector<Violation> v = Validate(rb);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kModeViolation);
}

TEST_CASE("validate: system-generated sum at 1e-9 tolerance") {
  RuleBase bad(RuleBaseMode::kSystemGenerated, 3, 3,
               {{TagSet(3, {0}), {0.3, 0.3, 0.3}}});
  std::vector<Violation> v = Validate(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kNormalizationViolation);

  RuleBase near(RuleBaseMode::kSystemGenerated, 3, 3,
                {{TagSet(3, {0}), {0.5, 0.5 - 5e-10, 0}}});
  CHECK(Validate(near).empty());
  RuleBase off(RuleBaseMode::kSystemGenerated, 3, 3,
               {{TagSet(3, {0}), {0.5, 0.5 - 5e-9, 0}}});
  CHECK(Validate(off).size() == 1);
  RuleBase zero(RuleBaseMode::kSystemGenerated, 3, 3,
                {{TagSet(3, {0}), {0, 0, 0}}});
  CHECK(Validate(zero).empty());
}

TEST_CASE("validate reports duplicates and empty combinations") {
  RuleBase rb(RuleBaseMode::kHandCrafted, 3, 2,
              {{TagSet(3, {0}), {1, 0}},
               {TagSet(3, {0}), {0, 1}},
               {TagSet(3), {0, 1}}});
  std::vector<Violation> v = Validate(rb);
  REQUIRE(v.size() == 2);
  CHECK(v[0].kind == ViolationKind::kDuplicateRule);
  CHECK(v[0].rule_index == 1);
  CHECK(v[1].kind == ViolationKind::kEmptyCombination);
  // Keyed lookup keeps the first rule.
  CHECK(*rb.Fire(TagSet(3, {0})) == ConfidenceVector{1, 0});
}

TEST_CASE("fire is order independent and exact") {
  RuleBase ref = LoadReferenceSystem().system_generated;
  std::vector<Rule> shuffled = ref.rules();
  std::mt19937 rng(5);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  RuleBase other(ref.mode(), ref.tag_count(), ref.domain_count(), shuffled,
                 ref.exclusions());
  for (uint64_t bits = 1; bits < 128; ++bits) {
    TagSet q(7, bits);
    CHECK(ref.Fire(q) == other.Fire(q));
    bool has_rule = std::any_of(ref.rules().begin(), ref.rules().end(),
                                [&](const Rule &r) { return r.combination == q; });
    CHECK(ref.Fire(q).has_value() == has_rule);
  }
}

TEST_CASE("load/serialize/load round trip") {
  ReferenceSystem ref = LoadReferenceSystem();
  for (const RuleBase *rb : {&ref.handcrafted, &ref.system_generated}) {
    std::string text = SerializeRuleBase(ref.registries, *rb);
    RuleBase again = LoadRuleBase(ref.registries, text);
    CHECK(again.mode() == rb->mode());
    CHECK(again.exclusions() == rb->exclusions());
    CHECK(again.rules() == rb->rules());  // FormatReal round-trips exactly
    CHECK(SerializeRuleBase(ref.registries, again) == text);
  }
}

TEST_CASE("rule lines use the documented layout") {
  ReferenceSystem ref = LoadReferenceSystem();
  RuleBase rb = MakeRuleBase(RuleBaseMode::kHandCrafted, 7, 3,
                             {{TagSet(7, {0, 1}), {1, 0, 0}}});
  CHECK(SerializeRuleBase(ref.registries, rb) ==
        "mode\thand-crafted\n"
        "rule\taddress+category\t"
        "yellow_pages:1.000000 movie:0.000000 road_map:0.000000\n");
}

}  // namespace
}  // namespace sqiis
