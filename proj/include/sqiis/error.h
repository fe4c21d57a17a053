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

#ifndef SQIIS_ERROR_H_
#define SQIIS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqiis {

enum class ErrorCode {
  kMalformedConfig,
  kDuplicateIdentifier,
  kUnknownTag,
  kUnknownIdentifier,
  kDuplicateRule,
  kInvalidConfidence,
  kModeViolation,
  kExcludedCombination,
  kEmptyQuery,
  kNoTagsFound,
  kEmptyTagSet,
  kRangeError,
  kDimensionError,
  kIoError,
};

// Stable name used in messages and structured output, e.g. "DuplicateRule".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }
  // Message without the code-name prefix.
  const std::string &detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace sqiis

#endif  // SQIIS_ERROR_H_
