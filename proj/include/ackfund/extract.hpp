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

#ifndef ACKFUND_EXTRACT_HPP
#define ACKFUND_EXTRACT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ackfund/cues.hpp"
#include "ackfund/errors.hpp"
#include "ackfund/paratext.hpp"

namespace ackfund::extract {

enum class Support { financial, non_financial, ambiguous };

std::string to_string(Support s);

struct FunderMention {
  std::string surface;
  std::size_t begin = 0;  // span into the statement text
  std::size_t end = 0;
  std::string cue;        // matched cue pattern, empty when none
  Support support = Support::ambiguous;
  std::vector<std::string> grant_codes;
  bool negated = false;

  paratext::SectionKind section_kind = paratext::SectionKind::other;
  // "at the X" marks a host institution; "funding to the X" a recipient.
  // Both block the funding-section upgrade of ambiguous mentions.
  bool host_marked = false;
  bool recipient_marked = false;
  // Country evidence printed next to the name, e.g. "(UK)".
  std::optional<std::string> country_hint;

  bool operator==(const FunderMention&) const = default;
};

// Known organization surfaces (usually the alias table's alias column).
// Gazetteer spans are matched atomically before the capitalization
// heuristic runs, which is how names containing lowercase words, commas
// or conjunctions survive intact.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(std::vector<std::string> surfaces);

  const std::vector<std::string>& surfaces() const { return surfaces_; }
  bool empty() const { return surfaces_.empty(); }

 private:
  std::vector<std::string> surfaces_;  // longest first
};

// All cue matches in one statement, longest-match-first among overlaps.
std::vector<CueMatch> detect_cues(const paratext::Statement& statement,
                                  const CueTable& cues);

// Funder mentions with cue-derived support, negation flags and attached
// grant codes. A statement with cues but no detectable name adds a
// diagnostic.
std::vector<FunderMention> extract_mentions(
    const std::vector<paratext::Statement>& statements, const CueTable& cues,
    const Gazetteer& gazetteer, Diagnostics& diagnostics);

std::vector<FunderMention> extract_mentions(
    const std::vector<paratext::Statement>& statements, const CueTable& cues);

// Applies the conservative support policy: ambiguous mentions in a
// funding section become financial, ambiguous mentions elsewhere become
// non-financial, negated mentions are dropped.
std::vector<FunderMention> resolve_support(std::vector<FunderMention> mentions);

// Distinct financial surfaces (case-insensitive, whitespace-normalized
// equality; the first-seen printed form is kept).
std::set<std::string> dedupe(const std::vector<FunderMention>& mentions);

// Convenience: locate -> segment -> extract -> resolve over a record's
// raw section list.
struct SectionExtraction {
  std::vector<FunderMention> mentions;  // resolved
  std::set<std::string> financial_surfaces;
};

SectionExtraction extract_sections(
    const std::vector<paratext::ParatextSection>& sections,
    const CueTable& cues, const Gazetteer& gazetteer,
    const paratext::HeadingLexicon& lexicon, Diagnostics& diagnostics);

// Grant-code shapes: at least one digit plus '/' or '-', or an
// uppercase-letter prefix followed by a digit; at least 3 chars.
bool looks_like_grant_code(const std::string& token);

}  // namespace ackfund::extract

#endif  // ACKFUND_EXTRACT_HPP
