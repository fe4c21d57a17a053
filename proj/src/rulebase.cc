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
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {

double ConfidenceVector::Sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double ConfidenceVector::Max() const {
  if (values_.empty()) return 0.0;
  return *std::max_element(values_.begin(), values_.end());
}

bool ConfidenceVector::IsAllZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double v) { return v == 0.0; });
}

std::string_view RuleBaseModeName(RuleBaseMode mode) {
  return mode == RuleBaseMode::kHandCrafted ? "hand-crafted"
                                            : "system-generated";
}

std::optional<RuleBaseMode> ParseRuleBaseMode(std::string_view name) {
  if (name == "hand-crafted") return RuleBaseMode::kHandCrafted;
  if (name == "system-generated") return RuleBaseMode::kSystemGenerated;
  return std::nullopt;
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyCombination: return "EmptyCombination";
    case ViolationKind::kDimensionMismatch: return "DimensionMismatch";
    case ViolationKind::kDuplicateRule: return "DuplicateRule";
    case ViolationKind::kInvalidConfidence: return "InvalidConfidence";
    case ViolationKind::kModeViolation: return "ModeViolation";
    case ViolationKind::kNormalizationViolation:
      return "NormalizationViolation";
    case ViolationKind::kExcludedCombination: return "ExcludedCombination";
  }
  return "Unknown";
}

RuleBase::RuleBase(RuleBaseMode mode, size_t tag_count, size_t domain_count,
                   std::vector<Rule> rules, ExclusionSet exclusions)
    : mode_(mode),
      tag_count_(tag_count),
      domain_count_(domain_count),
      rules_(std::move(rules)),
      exclusions_(std::move(exclusions)) {
  for (size_t i = 0; i < rules_.size(); ++i) {
    index_.try_emplace(rules_[i].combination.bits(), i);
  }
}

std::optional<size_t> RuleBase::FindRule(const TagSet &query) const {
  if (query.empty()) {
    throw Error(ErrorCode::kEmptyTagSet, "cannot fire an empty tag set");
  }
  if (query.width() != tag_count_) {
    throw Error(ErrorCode::kDimensionError,
                fmt::format("query width {} but rule base has {} tags",
                            query.width(), tag_count_));
  }
  auto it = index_.find(query.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ConfidenceVector> RuleBase::Fire(const TagSet &query) const {
  auto index = FindRule(query);
  if (!index) return std::nullopt;
  return rules_[*index].confidences;
}

std::vector<Violation> Validate(const RuleBase &rb) {
  std::vector<Violation> out;
  std::unordered_map<uint64_t, size_t> first_seen;
  const double tol = kConfidenceTolerance;

  for (size_t i = 0; i < rb.rules().size(); ++i) {
    const Rule &rule = rb.rules()[i];
    const ConfidenceVector &c = rule.confidences;
    std::string combo = fmt::format("rule {}", i);

    if (rule.combination.width() != rb.tag_count() ||
        c.size() != rb.domain_count()) {
      out.push_back({ViolationKind::kDimensionMismatch, i,
                     combo + ": vector lengths do not match registries"});
      continue;
    }
    if (rule.combination.empty()) {
      out.push_back({ViolationKind::kEmptyCombination, i,
                     combo + ": combination has no tags"});
    }
    auto [it, fresh] = first_seen.try_emplace(rule.combination.bits(), i);
    if (!fresh) {
      out.push_back({ViolationKind::kDuplicateRule, i,
                     fmt::format("{}: same combination as rule {}", combo,
                                 it->second)});
    }

    bool in_range = std::all_of(c.values().begin(), c.values().end(),
                                [](double v) { return v >= 0.0 && v <= 1.0; });
    if (!in_range) {
      out.push_back({ViolationKind::kInvalidConfidence, i,
                     combo + ": confidence outside [0,1]"});
      continue;
    }

    if (rb.mode() == RuleBaseMode::kHandCrafted) {
      size_t ones = 0;
      bool crisp = true;
      for (double v : c.values()) {
        if (std::abs(v - 1.0) <= tol) {
          ++ones;
        } else if (std::abs(v) > tol) {
          crisp = false;
        }
      }
      if (!crisp || ones > 1) {
        out.push_back({ViolationKind::kModeViolation, i,
                       combo + ": hand-crafted vector is not one-hot"});
      }
    } else {
      double sum = c.Sum();
      if (sum > tol && std::abs(sum - 1.0) > tol) {
        out.push_back({ViolationKind::kNormalizationViolation, i,
                       fmt::format("{}: confidences sum to {}", combo, sum)});
      }
      if (!rb.exclusions().IsValid(rule.combination)) {
        out.push_back({ViolationKind::kExcludedCombination, i,
                       combo + ": combination holds an excluded tag pair"});
      }
    }
  }
  return out;
}

namespace {

ErrorCode ErrorFor(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyCombination: return ErrorCode::kMalformedConfig;
    case ViolationKind::kDimensionMismatch: return ErrorCode::kDimensionError;
    case ViolationKind::kDuplicateRule: return ErrorCode::kDuplicateRule;
    case ViolationKind::kInvalidConfidence:
      return ErrorCode::kInvalidConfidence;
    case ViolationKind::kModeViolation:
    case ViolationKind::kNormalizationViolation:
      return ErrorCode::kModeViolation;
    case ViolationKind::kExcludedCombination:
      return ErrorCode::kExcludedCombination;
  }
  return ErrorCode::kMalformedConfig;
}

}  // namespace

RuleBase MakeRuleBase(RuleBaseMode mode, size_t tag_count,
                      size_t domain_count, std::vector<Rule> rules,
                      ExclusionSet exclusions) {
  RuleBase rb(mode, tag_count, domain_count, std::move(rules),
              std::move(exclusions));
  std::vector<Violation> violations = Validate(rb);
  if (!violations.empty()) {
    throw Error(ErrorFor(violations.front().kind),
                violations.front().message);
  }
  return rb;
}

ConfidenceVector ParseConfidences(const DomainRegistry &domains,
                                  std::string_view field) {
  ConfidenceVector out(domains.size());
  std::vector<bool> given(domains.size(), false);
  size_t pos = 0;
  field = Trim(field);
  while (pos < field.size()) {
    size_t end = field.find(' ', pos);
    if (end == std::string_view::npos) end = field.size();
    std::string_view item = field.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;

    size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("expected domain:confidence, got '{}'", item));
    }
    std::string_view id = item.substr(0, colon);
    auto d = domains.Find(id);
    if (!d) {
      throw Error(ErrorCode::kUnknownIdentifier,
                  fmt::format("unknown domain '{}'", id));
    }
    if (given[*d]) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("domain '{}' given twice", id));
    }
    given[*d] = true;
    out[*d] = ParseReal(item.substr(colon + 1), id);
  }
  return out;
}

RuleBase LoadRuleBase(const Registries &registries, std::string_view text) {
  std::optional<RuleBaseMode> mode;
  ExclusionSet exclusions;
  std::vector<Rule> rules;

  for (const ConfigLine &line : ParseConfigLines(text)) {
    std::string_view keyword = Trim(line.fields[0]);
    try {
      if (keyword == "mode" && line.fields.size() == 2) {
        if (mode) {
          throw Error(ErrorCode::kMalformedConfig, "mode given twice");
        }
        mode = ParseRuleBaseMode(Trim(line.fields[1]));
        if (!mode) {
          throw Error(ErrorCode::kMalformedConfig,
                      fmt::format("unknown mode '{}'", line.fields[1]));
        }
      } else if (keyword == "exclude" && line.fields.size() == 3) {
        AddExclusionFields(registries.tags, line.fields[1], line.fields[2],
                           exclusions);
      } else if (keyword == "rule" &&
                 (line.fields.size() == 2 || line.fields.size() == 3)) {
        Rule rule{ParseTagSet(line.fields[1], registries.tags),
                  line.fields.size() == 3
                      ? ParseConfidences(registries.domains, line.fields[2])
                      : ConfidenceVector(registries.domains.size())};
        rules.push_back(std::move(rule));
      } else {
        throw Error(ErrorCode::kMalformedConfig,
                    fmt::format("unrecognized line '{}'", keyword));
      }
    } catch (const Error &e) {
      throw Error(e.code(),
                  fmt::format("line {}: {}", line.number, e.detail()));
    }
  }
  if (!mode) {
    throw Error(ErrorCode::kMalformedConfig, "rule base has no mode line");
  }
  return MakeRuleBase(*mode, registries.tags.size(),
                      registries.domains.size(), std::move(rules),
                      std::move(exclusions));
}

std::string SerializeRuleBase(const Registries &registries,
                              const RuleBase &rb) {
  std::string out = fmt::format("mode\t{}\n", RuleBaseModeName(rb.mode()));
  out += SerializeExclusions(registries.tags, rb.exclusions());
  for (const Rule &rule : rb.rules()) {
    out += fmt::format("rule\t{}\t", rule.combination.ToString(registries.tags));
    for (size_t d = 0; d < rule.confidences.size(); ++d) {
      if (d) out += ' ';
      out += fmt::format("{}:{}", registries.domains.id(d),
                         FormatReal(rule.confidences[d]));
    }
    out += '\n';
  }
  return out;
}

}  // namespace sqiis
