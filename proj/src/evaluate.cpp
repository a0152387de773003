// Copyright 2026 The ackfund Authors
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

#include "ackfund/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace ackfund::evaluate {

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  tn += other.tn;
  return *this;
}

ConfusionCounts compute_confusion(const std::vector<EvalPair>& pairs) {
  ConfusionCounts counts;
  for (const auto& [system, reference] : pairs) {
    const bool sys = !system.empty();
    const bool ref = !reference.empty();
    if (sys && ref) ++counts.tp;
    else if (sys) ++counts.fp;
    else if (ref) ++counts.fn;
    else ++counts.tn;
  }
  return counts;
}

double recall(const ConfusionCounts& counts) {
  const std::int64_t denom = counts.tp + counts.fn;
  if (denom <= 0) throw MetricUndefinedError("recall undefined: tp + fn == 0");
  return static_cast<double>(counts.tp) / static_cast<double>(denom);
}

double precision(const ConfusionCounts& counts) {
  const std::int64_t denom = counts.tp + counts.fp;
  if (denom <= 0) throw MetricUndefinedError("precision undefined: tp + fp == 0");
  return static_cast<double>(counts.tp) / static_cast<double>(denom);
}

ListAccuracy list_accuracy(const std::vector<EvalPair>& true_positive_pairs) {
  if (true_positive_pairs.empty()) {
    throw MetricUndefinedError("list accuracy undefined: no true positives");
  }
  std::int64_t equal = 0;
  std::int64_t missed = 0;
  std::int64_t extra = 0;
  for (const auto& [system, reference] : true_positive_pairs) {
    if (system.empty() || reference.empty()) {
      throw ValidationError("list accuracy requires non-empty funder sets");
    }
    const bool missed_one =
        std::any_of(reference.begin(), reference.end(),
                    [&system](const std::string& f) { return system.count(f) == 0; });
    const bool extra_one =
        std::any_of(system.begin(), system.end(),
                    [&reference](const std::string& f) { return reference.count(f) == 0; });
    if (!missed_one && !extra_one) ++equal;
    if (missed_one) ++missed;
    if (extra_one) ++extra;
  }
  const double n = static_cast<double>(true_positive_pairs.size());
  return {static_cast<double>(equal) / n, static_cast<double>(missed) / n,
          static_cast<double>(extra) / n};
}

FunderStats funder_stats(const std::vector<FunderSet>& sets) {
  if (sets.empty()) throw MetricUndefinedError("funder stats undefined: no sets");
  FunderStats stats;
  FunderSet all;
  double sum = 0.0;
  for (const FunderSet& set : sets) {
    const auto size = static_cast<std::int64_t>(set.size());
    sum += static_cast<double>(size);
    stats.max = std::max(stats.max, size);
    all.insert(set.begin(), set.end());
  }
  const double n = static_cast<double>(sets.size());
  stats.mean = sum / n;
  double sq = 0.0;
  for (const FunderSet& set : sets) {
    const double d = static_cast<double>(set.size()) - stats.mean;
    sq += d * d;
  }
  stats.stddev = std::sqrt(sq / n);
  stats.distinct = static_cast<std::int64_t>(all.size());
  return stats;
}

EvaluationReport build_report(const std::vector<EvalPair>& pairs) {
  EvaluationReport report;
  report.counts = compute_confusion(pairs);
  report.recall = recall(report.counts);
  report.precision = precision(report.counts);

  std::vector<EvalPair> tp_pairs;
  std::vector<FunderSet> system_sets;
  for (const auto& pair : pairs) {
    if (!pair.first.empty()) system_sets.push_back(pair.first);
    if (!pair.first.empty() && !pair.second.empty()) tp_pairs.push_back(pair);
  }
  const ListAccuracy la = list_accuracy(tp_pairs);
  report.list_accuracy = la.accuracy;
  report.missed_any = la.missed_any;
  report.extra_any = la.extra_any;

  const FunderStats stats = funder_stats(system_sets);
  report.mean_funders = stats.mean;
  report.std_funders = stats.stddev;
  report.max_funders = stats.max;
  report.distinct_funders = stats.distinct;
  return report;
}

OmissionEstimate estimate_unreported_funding(double non_case_report_share,
                                             double external_share,
                                             std::optional<double> extra_factor,
                                             std::int64_t cohort_size,
                                             std::int64_t corpus_size) {
  const auto check_fraction = [](const char* name, double v) {
    if (v < 0.0 || v > 1.0) {
      throw ValidationError(std::string(name) + " out of [0,1]");
    }
  };
  check_fraction("non_case_report_share", non_case_report_share);
  check_fraction("external_share", external_share);
  if (extra_factor) check_fraction("extra_factor", *extra_factor);
  if (cohort_size <= 0 || corpus_size <= 0) {
    throw ValidationError("cohort and corpus sizes must be positive");
  }

  OmissionEstimate out;
  out.inputs["non_case_report_share"] = non_case_report_share;
  out.inputs["external_share"] = external_share;
  out.estimate = non_case_report_share * external_share;
  if (extra_factor) {
    out.inputs["extra_factor"] = *extra_factor;
    out.estimate *= *extra_factor;
  }
  // The corpus share follows the reporting convention of quoting the
  // estimate at two decimals before scaling.
  const double rounded = std::round(out.estimate * 100.0) / 100.0;
  out.corpus_share =
      rounded * static_cast<double>(cohort_size) / static_cast<double>(corpus_size);
  return out;
}

}  // namespace ackfund::evaluate
