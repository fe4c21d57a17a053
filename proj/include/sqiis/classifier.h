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

#ifndef SQIIS_CLASSIFIER_H_
#define SQIIS_CLASSIFIER_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sqiis/lexicon.h"
#include "sqiis/rulebase.h"
#include "sqiis/tag_set.h"
#include "sqiis/tagger.h"

namespace sqiis {

// Confidences closer than this count as tied.
inline constexpr double kTieTolerance = 1e-12;

struct DomainChoice {
  size_t domain;
  double confidence;

  bool operator==(const DomainChoice &) const = default;
};

// Argmax domain of `c`; lowest position wins ties. nullopt for an all-zero
// (or empty) vector.
std::optional<DomainChoice> SelectDomain(const ConfidenceVector &c);

enum class NoDomainReason { kNoTags, kNoRule, kZeroConfidence };

std::string_view NoDomainReasonName(NoDomainReason reason);

struct CandidateResult {
  TagSet combination;
  std::optional<ConfidenceVector> fired;  // nullopt: no rule matched
};

struct ClassificationResult {
  // Set for a DOMAIN outcome.
  std::optional<DomainChoice> choice;
  TagSet fired_combination;
  // Meaningful only when `choice` is empty.
  NoDomainReason reason = NoDomainReason::kNoRule;

  TaggedQuery tagged;
  std::vector<CandidateResult> candidates;

  bool has_domain() const { return choice.has_value(); }
};

// Tags the query, fires every candidate combination and keeps the fired
// rule with the greatest top confidence. Ties go to the earlier candidate.
// Throws EmptyQuery.
ClassificationResult Classify(std::string_view query, const LexiconSet &lex,
                              const RuleBase &rule_base,
                              size_t cap = kDefaultCandidateCap);

}  // namespace sqiis

#endif  // SQIIS_CLASSIFIER_H_
