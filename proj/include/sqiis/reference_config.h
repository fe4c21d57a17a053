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

#ifndef SQIIS_REFERENCE_CONFIG_H_
#define SQIIS_REFERENCE_CONFIG_H_

#include <filesystem>
#include <span>
#include <string_view>

#include "sqiis/exclusion_set.h"
#include "sqiis/lexicon.h"
#include "sqiis/registry.h"
#include "sqiis/rulebase.h"
#include "sqiis/rulegen.h"

namespace sqiis {

// Default file names inside a configuration directory.
inline constexpr std::string_view kRegistryFile = "registry.tsv";
inline constexpr std::string_view kLexiconFile = "lexicons.tsv";
inline constexpr std::string_view kWeightsFile = "weights.tsv";
inline constexpr std::string_view kExclusionsFile = "exclusions.tsv";
inline constexpr std::string_view kLabelsFile = "labels.tsv";
inline constexpr std::string_view kHandcraftedRuleBaseFile =
    "rulebase_handcrafted.tsv";
inline constexpr std::string_view kSystemRuleBaseFile = "rulebase_system.tsv";

struct ReferenceFile {
  std::string_view name;
  std::string_view content;
};

// The hand-written reference inputs compiled into the library (registry,
// lexicons, weights, exclusions, labels).
std::span<const ReferenceFile> ReferenceSources();

// The 7-tag / 3-domain reference system, with both rule bases built.
struct ReferenceSystem {
  Registries registries;
  LexiconSet lexicons;
  WeightMatrix weights;
  ExclusionSet exclusions;
  LabelSheet labels;
  RuleBase handcrafted;
  RuleBase system_generated;
};

ReferenceSystem LoadReferenceSystem();

// Writes the reference sources plus both generated rule-base files into
// `dir`, creating it if needed.
void SeedReferenceConfig(const std::filesystem::path &dir);

}  // namespace sqiis

#endif  // SQIIS_REFERENCE_CONFIG_H_
