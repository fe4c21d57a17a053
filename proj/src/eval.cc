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

#include "sqiis/eval.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "sqiis/classifier.h"
#include "sqiis/error.h"
#include "sqiis/rulegen.h"

namespace sqiis {

std::vector<TagSet> PerturbOneTag(const TagSet &q) {
  if (q.empty()) {
    throw Error(ErrorCode::kEmptyTagSet, "cannot perturb an empty tag set");
  }
  std::vector<TagSet> out;
  out.reserve(q.count() * (q.width() - q.count()));
  for (size_t i : q.positions()) {
    for (size_t j = 0; j < q.width(); ++j) {
      if (q.contains(j)) continue;
      TagSet p = q;
      p.reset(i).set(j);
      out.push_back(p);
    }
  }
  return out;
}

double EuclideanDistance(const ConfidenceVector &a,
                         const ConfidenceVector &b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionError,
                fmt::format("vectors of length {} and {}", a.size(),
                            b.size()));
  }
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::string_view OutcomeClassName(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::kC0: return "C0";
    case OutcomeClass::kC1: return "C1";
    case OutcomeClass::kC2: return "C2";
  }
  return "?";
}

size_t EvalReport::CountOf(OutcomeClass c) const {
  return static_cast<size_t>(std::count_if(
      cases.begin(), cases.end(),
      [c](const EvalCase &e) { return e.outcome == c; }));
}

std::vector<double> EvalReport::Distances(OutcomeClass c) const {
  std::vector<double> out;
  for (const EvalCase &e : cases) {
    if (e.outcome == c) out.push_back(e.distance);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<EvalCase> EvaluateOriginal(const RuleBase &rb,
                                       const TagSet &original) {
  std::vector<EvalCase> out;
  std::optional<ConfidenceVector> base = rb.Fire(original);
  if (!base) return out;
  std::optional<DomainChoice> base_choice = SelectDomain(*base);
  if (!base_choice) return out;

  const ConfidenceVector zero(rb.domain_count());
  for (const TagSet &perturbed : PerturbOneTag(original)) {
    std::optional<ConfidenceVector> fired = rb.Fire(perturbed);
    std::optional<DomainChoice> choice =
        fired ? SelectDomain(*fired) : std::nullopt;
    OutcomeClass outcome = OutcomeClass::kC2;
    if (choice) {
      outcome = choice->domain == base_choice->domain ? OutcomeClass::kC0
                                                      : OutcomeClass::kC1;
    }
    double distance = EuclideanDistance(*base, fired ? *fired : zero);
    out.push_back({original, perturbed, base, std::move(fired), outcome,
                   distance});
  }
  return out;
}

long long Bucket(double distance) {
  return std::llround(distance * 1e4);
}

}  // namespace

EvalReport RunEvaluation(const RuleBase &rule_base, size_t tag_count,
                         size_t size_min, size_t size_max,
                         unsigned threads) {
  if (tag_count != rule_base.tag_count()) {
    throw Error(ErrorCode::kDimensionError,
                fmt::format("tag count {} but rule base has {}", tag_count,
                            rule_base.tag_count()));
  }
  if (size_min < 1 || size_min > size_max || size_max > tag_count) {
    throw Error(ErrorCode::kRangeError,
                fmt::format("sizes {}..{} invalid for {} tags", size_min,
                            size_max, tag_count));
  }

  std::vector<TagSet> originals;
  for (const TagSet &q : EnumerateCombinations(tag_count)) {
    if (q.count() >= size_min && q.count() <= size_max) originals.push_back(q);
  }

  // Each original's cases land in its own slot, so concatenation order is
  // fixed regardless of how the slots are split among workers.
  std::vector<std::vector<EvalCase>> per_original(originals.size());
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(originals.size())));
  if (threads == 1) {
    for (size_t i = 0; i < originals.size(); ++i) {
      per_original[i] = EvaluateOriginal(rule_base, originals[i]);
    }
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (size_t i = t; i < originals.size(); i += threads) {
          per_original[i] = EvaluateOriginal(rule_base, originals[i]);
        }
      });
    }
  }

  EvalReport report;
  report.tag_count = tag_count;
  report.size_min = size_min;
  report.size_max = size_max;
  report.combinations_considered = originals.size();
  for (auto &cases : per_original) {
    if (!cases.empty()) ++report.originals_evaluated;
    for (EvalCase &c : cases) report.cases.push_back(std::move(c));
  }
  return report;
}

std::vector<HistogramRow> CumulativeTable(const EvalReport &report,
                                          OutcomeClass c) {
  std::vector<HistogramRow> rows;
  if (c == OutcomeClass::kC2) return rows;
  size_t cumulative = 0;
  for (double d : report.Distances(c)) {
    long long bucket = Bucket(d);
    ++cumulative;
    if (!rows.empty() && rows.back().bucket == bucket) {
      ++rows.back().cases;
      rows.back().cumulative = cumulative;
    } else {
      rows.push_back({bucket, 1, cumulative});
    }
  }
  return rows;
}

size_t ThresholdCount(const EvalReport &report, OutcomeClass c, double tau) {
  size_t n = 0;
  for (const EvalCase &e : report.cases) {
    if (e.outcome == c && e.distance <= tau) ++n;
  }
  return n;
}

std::string FormatReport(const EvalReport &report,
                         const std::vector<double> &taus) {
  std::string out;
  for (OutcomeClass c : {OutcomeClass::kC0, OutcomeClass::kC1}) {
    out += fmt::format("class\t{}\n", OutcomeClassName(c));
    out += "distance\tcases\tcumulative\n";
    for (const HistogramRow &row : CumulativeTable(report, c)) {
      out += fmt::format("{:.4f}\t{}\t{}\n", row.distance(), row.cases,
                         row.cumulative);
    }
    out += '\n';
  }
  out += fmt::format("c2\t{}\n", report.CountOf(OutcomeClass::kC2));
  out += fmt::format("total\t{}\n", report.total());
  for (double tau : taus) {
    for (OutcomeClass c : {OutcomeClass::kC0, OutcomeClass::kC1}) {
      out += fmt::format("threshold\t{}\t{}\t{}\n", tau, OutcomeClassName(c),
                         ThresholdCount(report, c, tau));
    }
  }
  return out;
}

std::string FormatPlotData(const EvalReport &report) {
  std::string out = "class\tcases\tdistance\n";
  for (OutcomeClass c : {OutcomeClass::kC0, OutcomeClass::kC1}) {
    size_t rank = 0;
    for (double d : report.Distances(c)) {
      out += fmt::format("{}\t{}\t{:.6f}\n", OutcomeClassName(c), ++rank, d);
    }
  }
  return out;
}

}  // namespace sqiis
