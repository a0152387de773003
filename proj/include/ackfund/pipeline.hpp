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

#ifndef ACKFUND_PIPELINE_HPP
#define ACKFUND_PIPELINE_HPP

#include <set>
#include <string>
#include <vector>

#include "ackfund/corpus.hpp"
#include "ackfund/evaluate.hpp"
#include "ackfund/extract.hpp"
#include "ackfund/harmonize.hpp"
#include "ackfund/landscape.hpp"

namespace ackfund::pipeline {

// Immutable per-run configuration; shared read-only across worker threads.
struct Tables {
  extract::CueTable cues = extract::CueTable::defaults();
  paratext::HeadingLexicon headings = paratext::HeadingLexicon::defaults();
  harmonize::AliasTable aliases;
  extract::Gazetteer gazetteer;  // built from the alias surfaces

  void build_gazetteer() { gazetteer = extract::Gazetteer(aliases.alias_surfaces()); }
};

// The per-record kernel output. Results are keyed by corpus position, so
// serial and parallel runs produce identical vectors.
struct RecordExtraction {
  std::string id;
  corpus::Cohort cohort = corpus::Cohort::no_ack;
  std::set<std::string> surfaces;      // deduplicated financial surfaces
  std::set<std::string> funder_ids;    // harmonized
  std::vector<std::string> unresolved; // normal forms
  Diagnostics diagnostics;
};

RecordExtraction extract_record(const corpus::PublicationRecord& record,
                                const Tables& tables);

// Serial reference implementation.
std::vector<RecordExtraction> run_extraction_serial(
    const std::vector<corpus::PublicationRecord>& records, const Tables& tables);

// OpenMP data-parallel run; `threads <= 0` uses the runtime default.
// Output is identical to the serial run for any thread count.
std::vector<RecordExtraction> run_extraction_parallel(
    const std::vector<corpus::PublicationRecord>& records, const Tables& tables,
    int threads = 0);

std::vector<RecordExtraction> run_extraction(
    const std::vector<corpus::PublicationRecord>& records, const Tables& tables,
    int threads);

struct CohortSummary {
  std::int64_t funded = 0;
  std::int64_t ack_no_funder = 0;
  std::int64_t no_ack = 0;

  std::int64_t total() const { return funded + ack_no_funder + no_ack; }
  CohortSummary& operator+=(const CohortSummary& other) {
    funded += other.funded;
    ack_no_funder += other.ack_no_funder;
    no_ack += other.no_ack;
    return *this;
  }
  bool operator==(const CohortSummary&) const = default;
};

CohortSummary summarize_cohorts(const std::vector<RecordExtraction>& results);

// Confusion counts over (system, reference) pairs; the parallel variant
// reduces per-thread partial counts, which is exact because counts form a
// commutative monoid.
evaluate::ConfusionCounts confusion_serial(const std::vector<evaluate::EvalPair>& pairs);
evaluate::ConfusionCounts confusion_parallel(const std::vector<evaluate::EvalPair>& pairs,
                                             int threads = 0);

// Projects extraction results onto the analytics input shape.
std::vector<landscape::FundedPublication> to_funded_publications(
    const std::vector<corpus::PublicationRecord>& records,
    const std::vector<RecordExtraction>& results);

}  // namespace ackfund::pipeline

#endif  // ACKFUND_PIPELINE_HPP
