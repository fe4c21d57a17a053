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

#ifndef SQIIS_RULEGEN_H_
#define SQIIS_RULEGEN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqiis/exclusion_set.h"
#include "sqiis/registry.h"
#include "sqiis/rulebase.h"
#include "sqiis/tag_set.h"

namespace sqiis {

// Largest tag count enumerate_combinations accepts.
inline constexpr size_t kMaxEnumerationTags = 24;

// Tag x domain weights. Row i says how much tag i pulls toward each domain.
class WeightMatrix {
 public:
  WeightMatrix(size_t tags, size_t domains)
      : tags_(tags), domains_(domains), w_(tags * domains, 0.0) {}

  size_t tags() const { return tags_; }
  size_t domains() const { return domains_; }

  double at(size_t tag, size_t domain) const {
    return w_[tag * domains_ + domain];
  }
  // Throws InvalidConfidence for a negative or non-finite weight.
  void set(size_t tag, size_t domain, double weight);

  // Multiplies every entry by `factor` (> 0).
  WeightMatrix Scaled(double factor) const;

  // Throws MalformedConfig if some tag row is all zero.
  void CheckRows() const;

 private:
  size_t tags_;
  size_t domains_;
  std::vector<double> w_;
};

// `weight<TAB>tag<TAB>domain<TAB>value` lines; missing pairs are 0.
WeightMatrix LoadWeights(const Registries &registries, std::string_view text);
std::string SerializeWeights(const Registries &registries,
                             const WeightMatrix &weights);

// All non-empty subsets of n tags in ascending binary order (2^n - 1 of
// them). Throws RangeError unless 1 <= n <= 24.
std::vector<TagSet> EnumerateCombinations(size_t n);

bool IsValidCombination(const TagSet &combination,
                        const ExclusionSet &exclusions);

// Sum of weights[i][domain] over the tags i set in `combination`.
double RawConfidence(const WeightMatrix &weights, const TagSet &combination,
                     size_t domain);

// Divides by the component total; an all-zero total yields the all-zero
// vector. Throws InvalidConfidence for a negative component.
ConfidenceVector Normalize(const ConfidenceVector &raw);

// One rule per valid combination with normalized summed weights.
// Zero-total combinations become all-zero rules.
RuleBase GenerateRuleBase(const WeightMatrix &weights,
                          const ExclusionSet &exclusions);

struct LabelRow {
  TagSet combination;
  std::optional<size_t> domain;  // nullopt means NO_DOMAIN
};

struct LabelSheet {
  ExclusionSet exclusions;
  std::vector<LabelRow> rows;
};

// Blank worksheet: every valid combination with a `?` placeholder, each row
// preceded by a comment naming its tags in words.
std::string ScaffoldLabelSheet(const Registries &registries,
                               const ExclusionSet &exclusions);

// Parses a filled sheet. `?` placeholders are rejected as MalformedConfig.
LabelSheet LoadLabelSheet(const Registries &registries,
                          std::string_view text);

std::string SerializeLabelSheet(const Registries &registries,
                                const LabelSheet &sheet);

// One-hot rule per labeled row, all-zero for NO_DOMAIN rows.
// Throws DuplicateRule if a combination repeats.
RuleBase CompileHandcrafted(const Registries &registries,
                            const LabelSheet &sheet);

}  // namespace sqiis

#endif  // SQIIS_RULEGEN_H_
