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

#include "ackfund/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ackfund::pipeline {

RecordExtraction extract_record(const corpus::PublicationRecord& record,
                                const Tables& tables) {
  RecordExtraction result;
  result.id = record.id;
  const extract::SectionExtraction extraction = extract::extract_sections(
      record.sections, tables.cues, tables.gazetteer, tables.headings,
      result.diagnostics);
  result.surfaces = extraction.financial_surfaces;
  const harmonize::HarmonizedSet harmonized =
      harmonize::harmonize_set(result.surfaces, tables.aliases);
  result.funder_ids = harmonized.funder_ids;
  result.unresolved = harmonized.unresolved;
  result.cohort = corpus::classify_cohort(record, result.surfaces);
  return result;
}

std::vector<RecordExtraction> run_extraction_serial(
    const std::vector<corpus::PublicationRecord>& records, const Tables& tables) {
  std::vector<RecordExtraction> results(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    results[i] = extract_record(records[i], tables);
  }
  return results;
}

std::vector<RecordExtraction> run_extraction_parallel(
    const std::vector<corpus::PublicationRecord>& records, const Tables& tables,
    int threads) {
  std::vector<RecordExtraction> results(records.size());
#ifdef _OPENMP
  const std::int64_t n = static_cast<std::int64_t>(records.size());
  if (threads > 0) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      results[i] = extract_record(records[i], tables);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      results[i] = extract_record(records[i], tables);
    }
  }
#else
  (void)threads;
  results = run_extraction_serial(records, tables);
#endif
  return results;
}

std::vector<RecordExtraction> run_extraction(
    const std::vector<corpus::PublicationRecord>& records, const Tables& tables,
    int threads) {
  if (threads == 1) return run_extraction_serial(records, tables);
  return run_extraction_parallel(records, tables, threads);
}

CohortSummary summarize_cohorts(const std::vector<RecordExtraction>& results) {
  CohortSummary summary;
  for (const RecordExtraction& result : results) {
    switch (result.cohort) {
      case corpus::Cohort::funded: ++summary.funded; break;
      case corpus::Cohort::ack_no_funder: ++summary.ack_no_funder; break;
      case corpus::Cohort::no_ack: ++summary.no_ack; break;
    }
  }
  return summary;
}

evaluate::ConfusionCounts confusion_serial(
    const std::vector<evaluate::EvalPair>& pairs) {
  return evaluate::compute_confusion(pairs);
}

evaluate::ConfusionCounts confusion_parallel(
    const std::vector<evaluate::EvalPair>& pairs, int threads) {
#ifdef _OPENMP
  evaluate::ConfusionCounts total;
  const std::int64_t n = static_cast<std::int64_t>(pairs.size());
  const int num_threads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(num_threads)
  {
    evaluate::ConfusionCounts local;
#pragma omp for nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const bool sys = !pairs[i].first.empty();
      const bool ref = !pairs[i].second.empty();
      if (sys && ref) ++local.tp;
      else if (sys) ++local.fp;
      else if (ref) ++local.fn;
      else ++local.tn;
    }
#pragma omp critical
    total += local;
  }
  return total;
#else
  (void)threads;
  return confusion_serial(pairs);
#endif
}

std::vector<landscape::FundedPublication> to_funded_publications(
    const std::vector<corpus::PublicationRecord>& records,
    const std::vector<RecordExtraction>& results) {
  std::vector<landscape::FundedPublication> pubs;
  pubs.reserve(records.size());
  for (std::size_t i = 0; i < records.size() && i < results.size(); ++i) {
    landscape::FundedPublication pub;
    pub.id = records[i].id;
    pub.funder_ids = results[i].funder_ids;
    pub.mesh = records[i].mesh_descriptors;
    pubs.push_back(std::move(pub));
  }
  return pubs;
}

}  // namespace ackfund::pipeline
