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

#ifndef ACKFUND_CUES_HPP
#define ACKFUND_CUES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ackfund/errors.hpp"

namespace ackfund::extract {

enum class CuePolarity { financial, non_financial, negation };

// One row of the cue lexicon. Patterns are matched case-insensitively at
// word boundaries and support two constructs:
//   "..."  a bounded gap of arbitrary words ("supported by ... grant")
//   "(s)"  an optional plural s                ("grant(s) from")
struct CueRule {
  std::string pattern;
  CuePolarity polarity;
  int priority = 0;  // position in the table, lower fires earlier

  bool operator==(const CueRule&) const = default;
};

struct CueMatch {
  const CueRule* rule = nullptr;
  std::size_t begin = 0;  // offsets into the matched text
  std::size_t end = 0;
  // End of the first literal segment. For gapped patterns the words after
  // the gap locate the match but the cue itself sits at the anchor.
  std::size_t anchor_end = 0;

  std::size_t length() const { return end - begin; }
};

class CueTable {
 public:
  CueTable() = default;
  explicit CueTable(std::vector<CueRule> rules);

  // Built-in lexicon used when no table file is supplied.
  static CueTable defaults();

  // Tab-separated file: pattern <TAB> polarity [<TAB> priority].
  // Lines starting with '#' and blank lines are skipped.
  static CueTable load(const std::string& path);

  // All matches in `text`, ordered by start offset, longest first among
  // matches that share a start (overlapping regions keep every match).
  std::vector<CueMatch> find_matches(const std::string& text) const;

  bool has_match(const std::string& text, CuePolarity polarity) const;

  const std::vector<CueRule>& rules() const { return rules_; }

 private:
  struct CompiledRule;
  std::vector<CueRule> rules_;
  std::vector<CompiledRule> compiled_;

  struct CompiledRule {
    // Alternative literal segment sequences after "(s)" expansion; a rule
    // matches when its segments occur in order within the gap limit.
    std::vector<std::vector<std::string>> alternatives;
    std::size_t rule_index = 0;
  };

  void compile();
};

std::string to_string(CuePolarity p);
CuePolarity cue_polarity_from_string(const std::string& s);

}  // namespace ackfund::extract

#endif  // ACKFUND_CUES_HPP
