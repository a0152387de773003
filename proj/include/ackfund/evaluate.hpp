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

#ifndef ACKFUND_EVALUATE_HPP
#define ACKFUND_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ackfund/errors.hpp"

namespace ackfund::evaluate {

// Publication-level confusion: a "positive" is a publication for which a
// side reports at least one funder. Forms a commutative monoid under +,
// so partial counts from corpus partitions merge exactly.
struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  ConfusionCounts& operator+=(const ConfusionCounts& other);
  friend ConfusionCounts operator+(ConfusionCounts a, const ConfusionCounts& b) {
    a += b;
    return a;
  }
  bool operator==(const ConfusionCounts&) const = default;
};

using FunderSet = std::set<std::string>;
using EvalPair = std::pair<FunderSet, FunderSet>;  // (system, reference)

ConfusionCounts compute_confusion(const std::vector<EvalPair>& pairs);

// tp / (tp + fn); throws MetricUndefinedError on an empty denominator.
double recall(const ConfusionCounts& counts);
// tp / (tp + fp); throws MetricUndefinedError on an empty denominator.
double precision(const ConfusionCounts& counts);

struct ListAccuracy {
  double accuracy = 0.0;    // fraction of pairs with system == reference
  double missed_any = 0.0;  // reference \ system non-empty
  double extra_any = 0.0;   // system \ reference non-empty
};

// Over true-positive pairs only; every pair must have both sets
// non-empty. Set equality, strictly stronger than count equality.
ListAccuracy list_accuracy(const std::vector<EvalPair>& true_positive_pairs);

struct FunderStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  std::int64_t max = 0;
  std::int64_t distinct = 0;  // |union of sets|
};

FunderStats funder_stats(const std::vector<FunderSet>& sets);

struct EvaluationReport {
  ConfusionCounts counts;
  double recall = 0.0;
  double precision = 0.0;
  double list_accuracy = 0.0;
  double missed_any = 0.0;
  double extra_any = 0.0;
  double mean_funders = 0.0;
  double std_funders = 0.0;
  std::int64_t max_funders = 0;
  std::int64_t distinct_funders = 0;
};

EvaluationReport build_report(const std::vector<EvalPair>& pairs);

struct OmissionEstimate {
  std::map<std::string, double> inputs;
  double estimate = 0.0;      // product of the input fractions
  double corpus_share = 0.0;  // estimate (2dp) scaled to the whole corpus
};

// Shares of silently funded publications inside a cohort: the estimate is
// the product of the provided fractions; the corpus share scales the
// two-decimal rounding of it by cohort_size / corpus_size.
OmissionEstimate estimate_unreported_funding(double non_case_report_share,
                                             double external_share,
                                             std::optional<double> extra_factor,
                                             std::int64_t cohort_size,
                                             std::int64_t corpus_size);

}  // namespace ackfund::evaluate

#endif  // ACKFUND_EVALUATE_HPP
