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

#include "sqiis/reference_config.h"

#include <string>

#include "sqiis/error.h"
#include "sqiis/text_util.h"

namespace sqiis {
namespace {

std::string_view Source(std::string_view name) {
  for (const ReferenceFile &f : ReferenceSources()) {
    if (f.name == name) return f.content;
  }
  throw Error(ErrorCode::kIoError,
              "reference source '" + std::string(name) + "' missing");
}

}  // namespace

ReferenceSystem LoadReferenceSystem() {
  Registries registries = LoadRegistries(Source(kRegistryFile));
  LexiconSet lexicons = LoadLexicons(registries.tags, Source(kLexiconFile));
  WeightMatrix weights = LoadWeights(registries, Source(kWeightsFile));
  ExclusionSet exclusions =
      LoadExclusions(registries.tags, Source(kExclusionsFile));
  LabelSheet labels = LoadLabelSheet(registries, Source(kLabelsFile));
  RuleBase handcrafted = CompileHandcrafted(registries, labels);
  RuleBase system_generated = GenerateRuleBase(weights, exclusions);
  return ReferenceSystem{std::move(registries),  std::move(lexicons),
                         std::move(weights),     std::move(exclusions),
                         std::move(labels),      std::move(handcrafted),
                         std::move(system_generated)};
}

void SeedReferenceConfig(const std::filesystem::path &dir) {
  ReferenceSystem ref = LoadReferenceSystem();
  std::filesystem::create_directories(dir);
  for (const ReferenceFile &f : ReferenceSources()) {
    WriteFileAtomic(dir / f.name, f.content);
  }
  WriteFileAtomic(dir / kHandcraftedRuleBaseFile,
                  SerializeRuleBase(ref.registries, ref.handcrafted));
  WriteFileAtomic(dir / kSystemRuleBaseFile,
                  SerializeRuleBase(ref.registries, ref.system_generated));
}

}  // namespace sqiis
