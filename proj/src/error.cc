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

#include "sqiis/error.h"

#include <string>

namespace sqiis {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedConfig: return "MalformedConfig";
    case ErrorCode::kDuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kUnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::kDuplicateRule: return "DuplicateRule";
    case ErrorCode::kInvalidConfidence: return "InvalidConfidence";
    case ErrorCode::kModeViolation: return "ModeViolation";
    case ErrorCode::kExcludedCombination: return "ExcludedCombination";
    case ErrorCode::kEmptyQuery: return "EmptyQuery";
    case ErrorCode::kNoTagsFound: return "NoTagsFound";
    case ErrorCode::kEmptyTagSet: return "EmptyTagSet";
    case ErrorCode::kRangeError: return "RangeError";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace sqiis
