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

#ifndef SQIIS_TEXT_UTIL_H_
#define SQIIS_TEXT_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sqiis {

// A configuration line with its 1-based line number, for error messages.
struct ConfigLine {
  int number;
  std::vector<std::string_view> fields;
};

// Splits line-oriented TSV text into tab-separated fields. Blank lines and
// lines starting with '#' are skipped; a trailing '\r' is dropped.
std::vector<ConfigLine> ParseConfigLines(std::string_view text);

std::string_view Trim(std::string_view s);

// Parses a finite real. Throws MalformedConfig naming `what` on failure.
double ParseReal(std::string_view s, std::string_view what);

// Fixed notation with at least 6 decimals, extended up to 17 until the
// printed value parses back to the same double.
std::string FormatReal(double value);

std::string ReadFile(const std::filesystem::path &path);

// Writes through a sibling temporary and renames over `path`, so readers
// never observe a partial file.
void WriteFileAtomic(const std::filesystem::path &path,
                     std::string_view content);

}  // namespace sqiis

#endif  // SQIIS_TEXT_UTIL_H_
