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

#include "ackfund/paratext.hpp"

#include <array>
#include <cctype>

#include "ackfund/text.hpp"

namespace ackfund::paratext {

namespace {

std::string normalize_heading(const std::string& heading) {
  std::string h = text::to_lower(text::collapse_whitespace(heading));
  while (!h.empty() && (h.back() == ':' || h.back() == '.' || h.back() == ' ')) {
    h.pop_back();
  }
  return h;
}

constexpr std::array<const char*, 10> kAbbreviationGuards = {
    "Dr", "Mr", "Ms", "Prof", "St", "e.g", "i.e", "et al", "Inc", "Ltd",
};

// True when the text before position `dot` ends with a guarded
// abbreviation, i.e. the '.' does not terminate a sentence.
bool guarded_abbreviation(const std::string& s, std::size_t dot) {
  const std::string_view prefix(s.data(), dot);
  for (const char* guard : kAbbreviationGuards) {
    const std::string_view g(guard);
    if (prefix.size() < g.size()) continue;
    if (!text::iequals(prefix.substr(prefix.size() - g.size()), g)) continue;
    if (prefix.size() == g.size()) return true;
    const char before = prefix[prefix.size() - g.size() - 1];
    if (!std::isalpha(static_cast<unsigned char>(before))) return true;
  }
  return false;
}

bool is_sentence_boundary(const std::string& s, std::size_t i) {
  const char c = s[i];
  if (c != '.' && c != '!' && c != '?') return false;
  // Must be followed by whitespace and an uppercase letter.
  std::size_t j = i + 1;
  if (j >= s.size() || std::isspace(static_cast<unsigned char>(s[j])) == 0) return false;
  while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  if (j >= s.size() || std::isupper(static_cast<unsigned char>(s[j])) == 0) return false;
  if (c == '.' && guarded_abbreviation(s, i)) return false;
  return true;
}

}  // namespace

std::string to_string(SectionKind k) {
  switch (k) {
    case SectionKind::acknowledgements: return "acknowledgements";
    case SectionKind::funding: return "funding";
    case SectionKind::disclosure: return "disclosure";
    case SectionKind::footnote: return "footnote";
    case SectionKind::other: return "other";
  }
  return "other";
}

SectionKind section_kind_from_string(const std::string& s) {
  if (s == "acknowledgements") return SectionKind::acknowledgements;
  if (s == "funding") return SectionKind::funding;
  if (s == "disclosure") return SectionKind::disclosure;
  if (s == "footnote") return SectionKind::footnote;
  if (s == "other") return SectionKind::other;
  throw ValidationError("unknown section kind: " + s);
}

HeadingLexicon HeadingLexicon::defaults() {
  HeadingLexicon lex;
  lex.add("acknowledgements", SectionKind::acknowledgements);
  lex.add("acknowledgments", SectionKind::acknowledgements);
  lex.add("funding", SectionKind::funding);
  lex.add("financial support", SectionKind::funding);
  lex.add("financial information", SectionKind::funding);
  lex.add("grant support", SectionKind::funding);
  lex.add("disclosure", SectionKind::disclosure);
  lex.add("disclosure statement", SectionKind::disclosure);
  lex.add("conflict of interest", SectionKind::disclosure);
  lex.add("conflicts of interest", SectionKind::disclosure);
  return lex;
}

void HeadingLexicon::add(const std::string& heading, SectionKind kind) {
  entries_[normalize_heading(heading)] = kind;
}

SectionKind HeadingLexicon::classify(const std::string& heading) const {
  const auto it = entries_.find(normalize_heading(heading));
  return it == entries_.end() ? SectionKind::other : it->second;
}

std::vector<ParatextSection> locate_sections(
    const std::vector<ParatextSection>& sections,
    const HeadingLexicon& lexicon, const extract::CueTable& cues) {
  std::vector<ParatextSection> out;
  for (const ParatextSection& section : sections) {
    if (text::trim(section.text).empty()) continue;
    const SectionKind by_heading = lexicon.classify(section.heading);
    if (by_heading != SectionKind::other) {
      out.push_back({by_heading, section.heading, section.text});
      continue;
    }
    const bool unlabeled = text::trim(section.heading).empty();
    if (unlabeled && section.kind != SectionKind::other &&
        section.kind != SectionKind::funding) {
      // Producer-annotated kind, honored except for `funding`, which is
      // reserved for sections whose heading matches the lexicon.
      out.push_back(section);
      continue;
    }
    if (unlabeled && cues.has_match(section.text, extract::CuePolarity::financial)) {
      out.push_back({SectionKind::footnote, section.heading, section.text});
    }
  }
  return out;
}

std::vector<ParatextSection> locate_sections(
    const std::vector<ParatextSection>& sections) {
  static const HeadingLexicon lexicon = HeadingLexicon::defaults();
  static const extract::CueTable cues = extract::CueTable::defaults();
  return locate_sections(sections, lexicon, cues);
}

std::vector<Statement> segment_statements(const ParatextSection& section) {
  const std::string& s = section.text;
  std::vector<Statement> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    // Skip inter-statement whitespace.
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    std::size_t boundary = std::string::npos;
    while (end < s.size()) {
      if (is_sentence_boundary(s, end)) {
        boundary = end + 1;
        break;
      }
      ++end;
    }
    if (boundary == std::string::npos) {
      // Unterminated final clause: runs to the last non-whitespace char.
      boundary = s.size();
      while (boundary > pos && std::isspace(static_cast<unsigned char>(s[boundary - 1]))) {
        --boundary;
      }
    }
    if (boundary > pos) {
      Statement st;
      st.section_kind = section.kind;
      st.begin = pos;
      st.end = boundary;
      st.text = s.substr(pos, boundary - pos);
      out.push_back(std::move(st));
    }
    pos = boundary;
  }
  return out;
}

}  // namespace ackfund::paratext
