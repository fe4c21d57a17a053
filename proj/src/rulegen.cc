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

#include "sqiis/rulegen.h"

#include <cmath>

#include <fmt/format.h>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {

void WeightMatrix::set(size_t tag, size_t domain, double weight) {
  if (tag >= tags_ || domain >= domains_) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("weight ({}, {}) outside {}x{}", tag, domain,
                            tags_, domains_));
  }
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::kInvalidConfidence,
                fmt::format("weight ({}, {}) = {} is negative", tag, domain,
                            weight));
  }
  w_[tag * domains_ + domain] = weight;
}

WeightMatrix WeightMatrix::Scaled(double factor) const {
  WeightMatrix out = *this;
  for (double &v : out.w_) v *= factor;
  return out;
}

void WeightMatrix::CheckRows() const {
  for (size_t i = 0; i < tags_; ++i) {
    bool any = false;
    for (size_t k = 0; k < domains_; ++k) any = any || at(i, k) > 0.0;
    if (!any) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("tag {} has no positive weight", i));
    }
  }
}

WeightMatrix LoadWeights(const Registries &registries, std::string_view text) {
  WeightMatrix w(registries.tags.size(), registries.domains.size());
  std::vector<bool> given(w.tags() * w.domains(), false);
  for (const ConfigLine &line : ParseConfigLines(text)) {
    if (line.fields.size() != 4 || Trim(line.fields[0]) != "weight") {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: expected "
                              "weight<TAB>tag<TAB>domain<TAB>value",
                              line.number));
    }
    auto tag = registries.tags.Find(Trim(line.fields[1]));
    auto domain = registries.domains.Find(Trim(line.fields[2]));
    if (!tag || !domain) {
      throw Error(ErrorCode::kUnknownIdentifier,
                  fmt::format("line {}: unknown tag or domain", line.number));
    }
    size_t slot = *tag * w.domains() + *domain;
    if (given[slot]) {
      throw Error(ErrorCode::kMalformedConfig,
                  fmt::format("line {}: weight given twice", line.number));
    }
    given[slot] = true;
    w.set(*tag, *domain, ParseReal(line.fields[3], "weight"));
  }
  w.CheckRows();
  return w;
}

std::string SerializeWeights(const Registries &registries,
                             const WeightMatrix &weights) {
  std::string out;
  for (size_t i = 0; i < weights.tags(); ++i) {
    for (size_t k = 0; k < weights.domains(); ++k) {
      out += fmt::format("weight\t{}\t{}\t{}\n", registries.tags.id(i),
                         registries.domains.id(k),
                         FormatReal(weights.at(i, k)));
    }
  }
  return out;
}

std::vector<TagSet> EnumerateCombinations(size_t n) {
  if (n < 1 || n > kMaxEnumerationTags) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("tag count {} outside 1..{}", n,
                            kMaxEnumerationTags));
  }
  const uint64_t end = uint64_t{1} << n;
  std::vector<TagSet> out;
  out.reserve(end - 1);
  for (uint64_t bits = 1; bits < end; ++bits) out.emplace_back(n, bits);
  return out;
}

bool IsValidCombination(const TagSet &combination,
                        const ExclusionSet &exclusions) {
  return exclusions.IsValid(combination);
}

double RawConfidence(const WeightMatrix &weights, const TagSet &combination,
                     size_t domain) {
  double sum = 0.0;
  for (size_t tag : combination.positions()) sum += weights.at(tag, domain);
  return sum;
}

ConfidenceVector Normalize(const ConfidenceVector &raw) {
  double total = 0.0;
  for (double v : raw.values()) {
    if (v < 0.0) {
      throw Error(ErrorCode::kInvalidConfidence,
                  fmt::format("negative component {}", v));
    }
    total += v;
  }
  ConfidenceVector out(raw.size());
  if (total <= 0.0) return out;
  for (size_t k = 0; k < raw.size(); ++k) out[k] = raw[k] / total;
  return out;
}

RuleBase GenerateRuleBase(const WeightMatrix &weights,
                          const ExclusionSet &exclusions) {
  std::vector<Rule> rules;
  for (const TagSet &combination : EnumerateCombinations(weights.tags())) {
    if (!IsValidCombination(combination, exclusions)) continue;
    ConfidenceVector raw(weights.domains());
    for (size_t k = 0; k < weights.domains(); ++k) {
      raw[k] = RawConfidence(weights, combination, k);
    }
    rules.push_back({combination, Normalize(raw)});
  }
  return MakeRuleBase(RuleBaseMode::kSystemGenerated, weights.tags(),
                      weights.domains(), std::move(rules), exclusions);
}

std::string ScaffoldLabelSheet(const Registries &registries,
                               const ExclusionSet &exclusions) {
  std::string domains;
  for (const RegistryEntry &d : registries.domains.entries()) {
    domains += ' ' + d.id;
  }
  std::string out;
  out += "# Label sheet: replace each '?' with a domain id or NO_DOMAIN.\n";
  out += fmt::format("# domains:{}\n", domains);
  out += "mode\thand-crafted\n";
  out += SerializeExclusions(registries.tags, exclusions);
  for (const TagSet &combination :
       EnumerateCombinations(registries.tags.size())) {
    if (!IsValidCombination(combination, exclusions)) continue;
    std::string words;
    for (size_t tag : combination.positions()) {
      if (!words.empty()) words += " + ";
      const std::string &desc = registries.tags.description(tag);
      words += desc.empty() ? registries.tags.id(tag) : desc;
    }
    out += fmt::format("# {}\nlabel\t{}\t?\n", words,
                       combination.ToString(registries.tags));
  }
  return out;
}

LabelSheet LoadLabelSheet(const Registries &registries,
                          std::string_view text) {
  LabelSheet sheet;
  for (const ConfigLine &line : ParseConfigLines(text)) {
    std::string_view keyword = Trim(line.fields[0]);
    try {
      if (keyword == "mode" && line.fields.size() == 2) {
        if (Trim(line.fields[1]) != "hand-crafted") {
          throw Error(ErrorCode::kMalformedConfig,
                      "label sheets are hand-crafted");
        }
      } else if (keyword == "exclude" && line.fields.size() == 3) {
        AddExclusionFields(registries.tags, line.fields[1], line.fields[2],
                           sheet.exclusions);
      } else if (keyword == "label" && line.fields.size() == 3) {
        LabelRow row{ParseTagSet(line.fields[1], registries.tags),
                     std::nullopt};
        std::string_view label = Trim(line.fields[2]);
        if (label == "?") {
          throw Error(ErrorCode::kMalformedConfig,
                      fmt::format("combination '{}' is not labeled",
                                  line.fields[1]));
        }
        if (label != kNoDomainLabel) {
          row.domain = registries.domains.Find(label);
          if (!row.domain) {
            throw Error(ErrorCode::kUnknownIdentifier,
                        fmt::format("unknown domain '{}'", label));
          }
        }
        sheet.rows.push_back(std::move(row));
      } else {
        throw Error(ErrorCode::kMalformedConfig,
                    fmt::format("unrecognized line '{}'", keyword));
      }
    } catch (const Error &e) {
      throw Error(e.code(),
                  fmt::format("line {}: {}", line.number, e.detail()));
    }
  }
  return sheet;
}

std::string SerializeLabelSheet(const Registries &registries,
                                const LabelSheet &sheet) {
  std::string out = "mode\thand-crafted\n";
  out += SerializeExclusions(registries.tags, sheet.exclusions);
  for (const LabelRow &row : sheet.rows) {
    out += fmt::format("label\t{}\t{}\n",
                       row.combination.ToString(registries.tags),
                       row.domain ? registries.domains.id(*row.domain)
                                  : std::string(kNoDomainLabel));
  }
  return out;
}

RuleBase CompileHandcrafted(const Registries &registries,
                            const LabelSheet &sheet) {
  std::vector<Rule> rules;
  rules.reserve(sheet.rows.size());
  for (const LabelRow &row : sheet.rows) {
    ConfidenceVector c(registries.domains.size());
    if (row.domain) c[*row.domain] = 1.0;
    rules.push_back({row.combination, std::move(c)});
  }
  return MakeRuleBase(RuleBaseMode::kHandCrafted, registries.tags.size(),
                      registries.domains.size(), std::move(rules),
                      sheet.exclusions);
}

}  // namespace sqiis
