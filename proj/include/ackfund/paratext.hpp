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

#ifndef ACKFUND_PARATEXT_HPP
#define ACKFUND_PARATEXT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ackfund/cues.hpp"

namespace ackfund::paratext {

enum class SectionKind { acknowledgements, funding, disclosure, footnote, other };

std::string to_string(SectionKind k);
SectionKind section_kind_from_string(const std::string& s);

struct ParatextSection {
  SectionKind kind = SectionKind::other;
  std::string heading;  // as printed
  std::string text;

  bool operator==(const ParatextSection&) const = default;
};

// One attributable sentence-level unit of a section.
struct Statement {
  SectionKind section_kind = SectionKind::other;
  std::string text;
  std::size_t begin = 0;  // char span into the section text
  std::size_t end = 0;

  bool operator==(const Statement&) const = default;
};

// Maps printed headings (case-insensitive, trailing ':' ignored) to the
// section kinds that make a section an extraction candidate.
class HeadingLexicon {
 public:
  static HeadingLexicon defaults();

  void add(const std::string& heading, SectionKind kind);
  // Returns `other` when the heading is unknown.
  SectionKind classify(const std::string& heading) const;

 private:
  std::map<std::string, SectionKind> entries_;
};

// Returns the sections worth scanning for funding data, with kinds
// assigned. Labeled sections are classified by heading; unlabeled
// sections are promoted to footnote candidates when they contain a
// financial cue; everything else is dropped.
std::vector<ParatextSection> locate_sections(
    const std::vector<ParatextSection>& sections,
    const HeadingLexicon& lexicon, const extract::CueTable& cues);

std::vector<ParatextSection> locate_sections(
    const std::vector<ParatextSection>& sections);

// Splits a section into statements on sentence boundaries: '.', '!' or
// '?' followed by whitespace and an uppercase letter, guarded against a
// short list of abbreviations (Dr, e.g, et al, Inc, ...). Spans cover the
// section text up to inter-statement whitespace.
std::vector<Statement> segment_statements(const ParatextSection& section);

}  // namespace ackfund::paratext

#endif  // ACKFUND_PARATEXT_HPP
