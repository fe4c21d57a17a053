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

#include "sqiis/error.h"

namespace sqiis {

std::optional<DomainChoice> SelectDomain(const ConfidenceVector &c) {
  std::optional<DomainChoice> best;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] <= 0.0) continue;
    if (!best || c[k] > best->confidence + kTieTolerance) {
      best = DomainChoice{k, c[k]};
    }
  }
  return best;
}

std::string_view NoDomainReasonName(NoDomainReason reason) {
  switch (reason) {
    case NoDomainReason::kNoTags: return "no-tags";
    case NoDomainReason::kNoRule: return "no-rule";
    case NoDomainReason::kZeroConfidence: return "zero-confidence";
  }
  return "unknown";
}

ClassificationResult Classify(std::string_view query, const LexiconSet &lex,
                              const RuleBase &rule_base, size_t cap) {
  ClassificationResult result;
  result.tagged = TokenizeAndTag(query, lex);
  result.fired_combination = TagSet(rule_base.tag_count());

  std::vector<TagSet> candidates;
  try {
    candidates = CandidateTagSets(result.tagged, lex.tag_count(), cap);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kNoTagsFound) throw;
    result.reason = NoDomainReason::kNoTags;
    return result;
  }

  const ConfidenceVector *best = nullptr;
  size_t best_index = 0;
  for (const TagSet &combination : candidates) {
    result.candidates.push_back({combination, rule_base.Fire(combination)});
  }
  for (size_t i = 0; i < result.candidates.size(); ++i) {
    const auto &fired = result.candidates[i].fired;
    if (!fired) continue;
    if (!best || fired->Max() > best->Max() + kTieTolerance) {
      best = &*fired;
      best_index = i;
    }
  }

  if (!best) {
    result.reason = NoDomainReason::kNoRule;
    return result;
  }
  result.fired_combination = result.candidates[best_index].combination;
  result.choice = SelectDomain(*best);
  if (!result.choice) result.reason = NoDomainReason::kZeroConfidence;
  return result;
}

}  // namespace sqiis
