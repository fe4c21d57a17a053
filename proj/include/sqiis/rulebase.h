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

#ifndef SQIIS_RULEBASE_H_
#define SQIIS_RULEBASE_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sqiis/exclusion_set.h"
#include "sqiis/registry.h"
#include "sqiis/tag_set.h"

namespace sqiis {

// Tolerance for sum-to-one and one-hot checks.
inline constexpr double kConfidenceTolerance = 1e-9;

// Per-domain confidences, indexed by domain position.
class ConfidenceVector {
 public:
  ConfidenceVector() = default;
  explicit ConfidenceVector(size_t domains) : values_(domains, 0.0) {}
  explicit ConfidenceVector(std::vector<double> values)
      : values_(std::move(values)) {}
  ConfidenceVector(std::initializer_list<double> values) : values_(values) {}

  size_t size() const { return values_.size(); }
  double operator[](size_t i) const { return values_[i]; }
  double &operator[](size_t i) { return values_[i]; }
  const std::vector<double> &values() const { return values_; }

  double Sum() const;
  double Max() const;
  bool IsAllZero() const;

  bool operator==(const ConfidenceVector &) const = default;

 private:
  std::vector<double> values_;
};

struct Rule {
  TagSet combination;
  ConfidenceVector confidences;

  bool operator==(const Rule &) const = default;
};

enum class RuleBaseMode { kHandCrafted, kSystemGenerated };

std::string_view RuleBaseModeName(RuleBaseMode mode);
std::optional<RuleBaseMode> ParseRuleBaseMode(std::string_view name);

enum class ViolationKind {
  kEmptyCombination,
  kDimensionMismatch,
  kDuplicateRule,
  kInvalidConfidence,
  kModeViolation,           // hand-crafted vector not one-hot / zero
  kNormalizationViolation,  // system-generated vector not summing to 1
  kExcludedCombination,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  size_t rule_index;
  std::string message;
};

// Rules keyed by exact combination bits. Construction does not validate;
// use Validate() or MakeRuleBase() for checked construction.
class RuleBase {
 public:
  RuleBase(RuleBaseMode mode, size_t tag_count, size_t domain_count,
           std::vector<Rule> rules, ExclusionSet exclusions = {});

  RuleBaseMode mode() const { return mode_; }
  size_t tag_count() const { return tag_count_; }
  size_t domain_count() const { return domain_count_; }
  const std::vector<Rule> &rules() const { return rules_; }
  const ExclusionSet &exclusions() const { return exclusions_; }

  // Exact bit-vector match. Returns the rule's confidences or nullopt when
  // no rule has this combination. Throws EmptyTagSet for an empty query.
  std::optional<ConfidenceVector> Fire(const TagSet &query) const;

  // Same lookup returning the rule index.
  std::optional<size_t> FindRule(const TagSet &query) const;

 private:
  RuleBaseMode mode_;
  size_t tag_count_;
  size_t domain_count_;
  std::vector<Rule> rules_;
  ExclusionSet exclusions_;
  // First occurrence wins for duplicate combinations; Validate reports them.
  std::unordered_map<uint64_t, size_t> index_;
};

// Empty iff every rule satisfies the invariants of the declared mode.
std::vector<Violation> Validate(const RuleBase &rule_base);

// Constructs and validates; throws the Error matching the first violation
// (DuplicateRule, InvalidConfidence, ModeViolation, ExcludedCombination,
// DimensionError, MalformedConfig).
RuleBase MakeRuleBase(RuleBaseMode mode, size_t tag_count,
                      size_t domain_count, std::vector<Rule> rules,
                      ExclusionSet exclusions = {});

// Rule-base file:
//   mode<TAB>hand-crafted|system-generated
//   exclude<TAB>tag<TAB>tag            (zero or more)
//   rule<TAB>tag+tag<TAB>domain:conf domain:conf ...
// Omitted domains default to 0.
RuleBase LoadRuleBase(const Registries &registries, std::string_view text);

// Parses `domain:conf domain:conf ...` into a full-length vector.
ConfidenceVector ParseConfidences(const DomainRegistry &domains,
                                  std::string_view field);

std::string SerializeRuleBase(const Registries &registries,
                              const RuleBase &rule_base);

}  // namespace sqiis

#endif  // SQIIS_RULEBASE_H_
