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

#include "ackfund/cues.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "ackfund/text.hpp"

namespace ackfund::extract {

namespace {

// Longest run of words a "..." gap may skip, in characters.
constexpr std::size_t kGapLimit = 40;

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

// A match may not start right after a word character or a hyphen, so
// "co-funding" does not expose a "funding" cue. A trailing hyphen is a
// valid end boundary ("Grant-in-Aid" ends a "grant" segment).
bool starts_at_boundary(const std::string& text, std::size_t pos) {
  if (pos == 0) return true;
  const char prev = text[pos - 1];
  return !is_word_char(prev) && prev != '-';
}

bool ends_at_boundary(const std::string& text, std::size_t pos) {
  return pos >= text.size() || !is_word_char(text[pos]);
}

std::size_t find_segment(const std::string& text, const std::string& segment,
                         std::size_t from) {
  std::size_t pos = from;
  while (true) {
    pos = text::ifind(text, segment, pos);
    if (pos == std::string::npos) return std::string::npos;
    if (starts_at_boundary(text, pos) && ends_at_boundary(text, pos + segment.size())) {
      return pos;
    }
    ++pos;
  }
}

// Expands every "(s)" in the pattern into with/without-s variants.
void expand_plural(const std::string& pattern, std::vector<std::string>& out) {
  const std::size_t pos = pattern.find("(s)");
  if (pos == std::string::npos) {
    out.push_back(pattern);
    return;
  }
  const std::string head = pattern.substr(0, pos);
  const std::string tail = pattern.substr(pos + 3);
  expand_plural(head + tail, out);
  expand_plural(head + "s" + tail, out);
}

}  // namespace

std::string to_string(CuePolarity p) {
  switch (p) {
    case CuePolarity::financial: return "financial";
    case CuePolarity::non_financial: return "non_financial";
    case CuePolarity::negation: return "negation";
  }
  return "financial";
}

CuePolarity cue_polarity_from_string(const std::string& s) {
  if (s == "financial") return CuePolarity::financial;
  if (s == "non_financial") return CuePolarity::non_financial;
  if (s == "negation") return CuePolarity::negation;
  throw ValidationError("unknown cue polarity: " + s);
}

CueTable::CueTable(std::vector<CueRule> rules) : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].pattern.empty()) {
      throw ValidationError("cue rule with empty pattern");
    }
    rules_[i].priority = static_cast<int>(i);
  }
  compile();
}

CueTable CueTable::defaults() {
  using P = CuePolarity;
  return CueTable({
      // Statements of direct financial support.
      {"research was funded by", P::financial},
      {"funded by", P::financial},
      {"was supported by", P::financial},
      {"supported by ... grant", P::financial},
      {"grant(s) from", P::financial},
      {"grant-in-aid", P::financial},
      {"financial support from", P::financial},
      {"funding from", P::financial},
      {"funding to", P::financial},
      {"travel support from", P::financial},
      // Courtesy, material and in-kind support.
      {"gift of", P::non_financial},
      {"technical assistance", P::non_financial},
      {"thank", P::non_financial},
      {"proofreading", P::non_financial},
      {"provision of test material", P::non_financial},
      // Past or unrelated support; must not count toward the focal work.
      {"has received funding", P::non_financial},
      {"has received ... funding", P::non_financial},
      {"have received funding", P::non_financial},
      {"honoraria", P::non_financial},
      {"is an employee of", P::non_financial},
      {"are employees of", P::non_financial},
      // Explicit denial of funding.
      {"was not funded", P::negation},
      {"no funding", P::negation},
      {"did not receive funding", P::negation},
  });
}

CueTable CueTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cue table: " + path);
  std::vector<CueRule> rules;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() < 2) {
      throw ValidationError("cue table " + path + " line " +
                            std::to_string(line_no) + ": expected pattern<TAB>polarity");
    }
    CueRule rule;
    rule.pattern = text::trim(cols[0]);
    rule.polarity = cue_polarity_from_string(text::trim(cols[1]));
    rules.push_back(std::move(rule));
  }
  return CueTable(std::move(rules));
}

void CueTable::compile() {
  compiled_.clear();
  compiled_.reserve(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    CompiledRule c;
    c.rule_index = i;
    std::vector<std::string> variants;
    expand_plural(text::to_lower(rules_[i].pattern), variants);
    for (const std::string& v : variants) {
      std::vector<std::string> segments;
      std::size_t pos = 0;
      while (true) {
        const std::size_t gap = v.find("...", pos);
        if (gap == std::string::npos) {
          segments.push_back(text::trim(v.substr(pos)));
          break;
        }
        segments.push_back(text::trim(v.substr(pos, gap - pos)));
        pos = gap + 3;
      }
      std::erase_if(segments, [](const std::string& s) { return s.empty(); });
      if (!segments.empty()) c.alternatives.push_back(std::move(segments));
    }
    compiled_.push_back(std::move(c));
  }
}

std::vector<CueMatch> CueTable::find_matches(const std::string& statement) const {
  std::vector<CueMatch> matches;
  for (const CompiledRule& c : compiled_) {
    for (const auto& segments : c.alternatives) {
      std::size_t from = 0;
      while (true) {
        const std::size_t begin = find_segment(statement, segments[0], from);
        if (begin == std::string::npos) break;
        const std::size_t anchor_end = begin + segments[0].size();
        std::size_t end = anchor_end;
        bool ok = true;
        for (std::size_t s = 1; s < segments.size(); ++s) {
          const std::size_t next = find_segment(statement, segments[s], end);
          if (next == std::string::npos || next > end + kGapLimit) {
            ok = false;
            break;
          }
          end = next + segments[s].size();
        }
        if (ok) matches.push_back({&rules_[c.rule_index], begin, end, anchor_end});
        from = begin + 1;
      }
    }
  }
  std::sort(matches.begin(), matches.end(), [](const CueMatch& a, const CueMatch& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    if (a.length() != b.length()) return a.length() > b.length();
    return a.rule->priority < b.rule->priority;
  });
  // Identical spans from different rule variants collapse to the highest
  // priority rule.
  matches.erase(std::unique(matches.begin(), matches.end(),
                            [](const CueMatch& a, const CueMatch& b) {
                              return a.begin == b.begin && a.end == b.end;
                            }),
                matches.end());
  return matches;
}

bool CueTable::has_match(const std::string& text, CuePolarity polarity) const {
  for (const CueMatch& m : find_matches(text)) {
    if (m.rule->polarity == polarity) return true;
  }
  return false;
}

}  // namespace ackfund::extract
