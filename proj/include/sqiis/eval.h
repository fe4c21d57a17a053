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

#ifndef SQIIS_EVAL_H_
#define SQIIS_EVAL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqiis/rulebase.h"
#include "sqiis/tag_set.h"

namespace sqiis {

// Single-tag substitutions of `q`: for each set bit i (ascending) and each
// unset bit j (ascending), q with i cleared and j set. |q| * (n - |q|)
// results. Throws EmptyTagSet.
std::vector<TagSet> PerturbOneTag(const TagSet &q);

// Throws DimensionError on a length mismatch.
double EuclideanDistance(const ConfidenceVector &a, const ConfidenceVector &b);

// C0: same domain after perturbation. C1: a different domain.
// C2: the perturbed combination selects no domain.
enum class OutcomeClass { kC0, kC1, kC2 };

std::string_view OutcomeClassName(OutcomeClass c);

struct EvalCase {
  TagSet original;
  TagSet perturbed;
  std::optional<ConfidenceVector> original_result;
  std::optional<ConfidenceVector> perturbed_result;
  OutcomeClass outcome;
  double distance;
};

struct HistogramRow {
  long long bucket;  // distance * 10^4, rounded
  size_t cases;
  size_t cumulative;

  double distance() const { return static_cast<double>(bucket) / 1e4; }
  bool operator==(const HistogramRow &) const = default;
};

struct EvalReport {
  size_t tag_count = 0;
  size_t size_min = 0;
  size_t size_max = 0;
  // Combinations in the size range, and how many of them selected a domain
  // and were therefore perturbed.
  size_t combinations_considered = 0;
  size_t originals_evaluated = 0;
  std::vector<EvalCase> cases;  // enumeration order of originals

  size_t CountOf(OutcomeClass c) const;
  size_t total() const { return cases.size(); }
  // Sorted ascending distances of one class.
  std::vector<double> Distances(OutcomeClass c) const;
};

// Perturbs every combination of size_min..size_max tags that fires a rule
// selecting a domain, and classifies each perturbation. Combinations are
// split across `threads` workers; output does not depend on the split.
// Throws RangeError unless 1 <= size_min <= size_max <= tag_count, and
// DimensionError if tag_count differs from the rule base.
EvalReport RunEvaluation(const RuleBase &rule_base, size_t tag_count,
                         size_t size_min, size_t size_max,
                         unsigned threads = 1);

// Rows bucketed at 4 decimals, ascending, with running cumulative counts.
// Only C0 and C1 are tabulated; C2 yields no rows.
std::vector<HistogramRow> CumulativeTable(const EvalReport &report,
                                          OutcomeClass c);

// Cases of class `c` whose (unbucketed) distance is <= tau.
size_t ThresholdCount(const EvalReport &report, OutcomeClass c, double tau);

// TSV report: a `class` block per tabulated class with
// `distance<TAB>cases<TAB>cumulative` rows, then `c2`, `total` and one
// `threshold<TAB>tau<TAB>class<TAB>count` line per tau and class.
std::string FormatReport(const EvalReport &report,
                         const std::vector<double> &taus);

// Plot-ready cumulative curves: `class<TAB>cases<TAB>distance`, one line
// per case in ascending distance order.
std::string FormatPlotData(const EvalReport &report);

}  // namespace sqiis

#endif  // SQIIS_EVAL_H_
