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

#ifndef ACKFUND_CORPUS_HPP
#define ACKFUND_CORPUS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ackfund/errors.hpp"
#include "ackfund/paratext.hpp"

namespace ackfund::corpus {

enum class DocType {
  article,
  review,
  conference_paper,
  editorial,
  erratum,
  note,
  letter,
  short_survey,
  book,
  other,
};

std::string to_string(DocType t);
// Unknown strings map to `other`; `was_known` reports whether the input
// named a listed type so callers can emit a diagnostic.
DocType doc_type_from_string(const std::string& s, bool* was_known = nullptr);

struct MeshAssignment {
  std::string descriptor_name;
  std::vector<std::string> tree_numbers;  // e.g. "C04.588.274"

  bool operator==(const MeshAssignment&) const = default;
};

struct ReferenceAnnotation {
  std::set<std::string> funders;  // canonical funder ids
  bool has_ack_section = false;

  bool operator==(const ReferenceAnnotation&) const = default;
};

struct ExternalFunderEntry {
  std::string name_raw;
  std::vector<std::string> grant_codes;

  bool operator==(const ExternalFunderEntry&) const = default;
};

struct PublicationRecord {
  std::string id;  // PMID-like opaque identifier
  int pub_year = 0;
  std::string journal;
  DocType doc_type = DocType::other;
  std::vector<std::string> author_countries;  // ISO 3166-1 alpha-2, one per author
  std::vector<MeshAssignment> mesh_descriptors;
  std::vector<paratext::ParatextSection> sections;
  std::optional<std::string> wos_fu_raw;
  std::optional<std::vector<std::string>> medline_grants_raw;
  std::optional<ReferenceAnnotation> reference;

  bool operator==(const PublicationRecord&) const = default;
};

// "C04.588.274": a letter, digits, then dot-separated digit groups.
bool valid_tree_number(const std::string& s);

// Throws ValidationError describing the first violated invariant.
void validate_record(const PublicationRecord& record);

// Parses one corpus line (a JSON document). Throws ValidationError on
// malformed input. Unknown doc_type strings map to `other` with a
// diagnostic when a sink is given.
PublicationRecord parse_record_line(const std::string& line,
                                    Diagnostics* diagnostics = nullptr);
std::string serialize_record(const PublicationRecord& record);

// Loads a line-delimited corpus file. Malformed lines are skipped with a
// line-numbered diagnostic; duplicate ids are fatal.
std::vector<PublicationRecord> load_corpus(const std::string& path,
                                           Diagnostics& diagnostics);

void save_corpus(const std::vector<PublicationRecord>& records,
                 const std::string& path);

struct JoinResult {
  std::vector<PublicationRecord> joined;
  std::vector<std::string> unmatched;  // primary ids without a partner
};

// Merges author_countries and doc_type from `secondary` into matching
// `primary` records. Ids must be unique within each input.
JoinResult join_by_id(const std::vector<PublicationRecord>& primary,
                      const std::vector<PublicationRecord>& secondary);

// Splits a WoS-style FU field: entries separated by "; " at top level,
// one optional trailing "[code, code]" group per entry.
std::vector<ExternalFunderEntry> parse_wos_fu(const std::string& raw,
                                              Diagnostics& diagnostics);
std::vector<ExternalFunderEntry> parse_wos_fu(const std::string& raw);
std::string serialize_fu(const std::vector<ExternalFunderEntry>& entries);

// "CODE/SUBAGENCY/AGENCY/COUNTRY" with graceful whole-string fallback.
ExternalFunderEntry parse_medline_grant(const std::string& raw);

enum class Cohort { funded, ack_no_funder, no_ack };

std::string to_string(Cohort c);

// FUNDED when the record yielded funders; otherwise ACK_NO_FUNDER when
// any acknowledgement-bearing section exists; NO_ACK otherwise.
Cohort classify_cohort(const PublicationRecord& record,
                       const std::set<std::string>& extracted_funders);

}  // namespace ackfund::corpus

#endif  // ACKFUND_CORPUS_HPP
