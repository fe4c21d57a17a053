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

#ifndef SQIIS_TESTS_FIXTURES_H_
#define SQIIS_TESTS_FIXTURES_H_

#include <string>

#include "doctest.h"
#include "sqiis/error.h"
#include "sqiis/registry.h"
#include "sqiis/rulebase.h"

namespace fixtures {

// Runs `fn` and returns the code of the sqiis::Error it throws.
template <typename Fn>
sqiis::ErrorCode CodeOf(Fn &&fn) {
  try {
    fn();
  } catch (const sqiis::Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return sqiis::ErrorCode::kIoError;
}

// Five tags t1..t5, two domains and two sample rules.
inline const char *kFiveTagRegistry =
    "[tags]\n"
    "t1\tfirst\nt2\tsecond\nt3\tthird\nt4\tfourth\nt5\tfifth\n"
    "[domains]\n"
    "D1\tdomain one\nD2\tdomain two\n";

inline const char *kFiveTagRules =
    "mode\tsystem-generated\n"
    "rule\tt1+t4\tD1:0.75 D2:0.25\n"
    "rule\tt2+t5\tD1:0.45 D2:0.55\n";

inline sqiis::Registries FiveTagRegistries() {
  return sqiis::LoadRegistries(kFiveTagRegistry);
}

inline sqiis::RuleBase FiveTagRuleBase() {
  return sqiis::LoadRuleBase(FiveTagRegistries(), kFiveTagRules);
}

// Three tags, three domains, for small hand-checkable cases.
inline const char *kSmallRegistry =
    "[tags]\na\tA\nb\tB\nc\tC\n[domains]\nx\tX\ny\tY\nz\tZ\n";

}  // namespace fixtures

#endif  // SQIIS_TESTS_FIXTURES_H_
