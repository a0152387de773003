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

#include "ackfund/extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "ackfund/harmonize.hpp"
#include "ackfund/text.hpp"

namespace ackfund::extract {

namespace {

// A name may start up to this many chars after a cue's anchor, or end
// this close before the cue, to count as adjacent.
constexpr std::size_t kForwardWindow = 120;
constexpr std::size_t kBackwardWindow = 60;

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

const std::unordered_set<std::string>& instrument_words() {
  static const std::unordered_set<std::string> words = {
      "grant", "grants", "grant-in-aid", "award", "awards",
      "fellowship", "fellowships", "scholarship", "scholarships",
      "studentship", "studentships", "programme", "program",
      "project", "projects", "funding",
  };
  return words;
}

const std::unordered_set<std::string>& organization_words() {
  static const std::unordered_set<std::string> words = {
      "agency", "agencies", "council", "councils", "institute", "institutes",
      "institution", "foundation", "foundations", "society", "ministry",
      "ministries", "department", "departments", "trust", "association",
      "commission", "committee", "centre", "center", "fund", "funds",
      "charity", "charities", "university", "universities", "college",
      "school", "hospital", "laboratory", "laboratories", "office", "board",
      "organisation", "organization", "authority", "company", "corporation",
      "inc", "ltd",
  };
  return words;
}

const std::unordered_set<std::string>& honorifics() {
  static const std::unordered_set<std::string> words = {
      "Dr", "Mr", "Ms", "Mrs", "Prof", "Sir",
  };
  return words;
}

const std::unordered_set<std::string>& corporate_suffixes() {
  static const std::unordered_set<std::string> words = {
      "Inc", "Ltd", "LLC", "GmbH", "SpA", "Co", "Corp", "AG", "BV",
  };
  return words;
}

bool is_connector(const std::string& core) {
  return core == "of" || core == "for" || core == "and" || core == "the" || core == "&";
}

struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;    // raw extent, may carry trailing periods
  std::string raw;
  std::string core;       // raw minus trailing '.' runs
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto is_token_char = [](char c) {
    return is_alnum(c) || c == '\'' || c == '&' || c == '.' || c == '/' || c == '-';
  };
  while (i < s.size()) {
    if (!is_token_char(s[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < s.size() && is_token_char(s[i])) ++i;
    Token t;
    t.begin = begin;
    t.end = i;
    t.raw = s.substr(begin, i - begin);
    std::size_t core_len = t.raw.size();
    while (core_len > 0 && t.raw[core_len - 1] == '.') --core_len;
    t.core = t.raw.substr(0, core_len);
    if (!t.core.empty()) tokens.push_back(std::move(t));
  }
  return tokens;
}

// "R.C.", "D.W.N." - single letters joined by periods.
bool is_dotted_initials(const std::string& raw) {
  if (raw.size() < 2) return false;
  bool expect_letter = true;
  for (char c : raw) {
    if (expect_letter) {
      if (!is_alpha(c)) return false;
    } else {
      if (c != '.') return false;
    }
    expect_letter = !expect_letter;
  }
  // Must end on a period or a lone letter after one.
  return raw.size() >= 3 || raw.back() == '.';
}

bool is_capitalized(const std::string& core) {
  return !core.empty() && is_upper(core[0]);
}

// All-caps alphanumeric acronym of >= `min_len` chars, e.g. NIHR, DFG.
bool is_acronym(const std::string& core, std::size_t min_len) {
  if (core.size() < min_len) return false;
  bool has_letter = false;
  for (char c : core) {
    if (is_lower(c)) return false;
    if (!is_upper(c) && !is_digit(c) && c != '&') return false;
    if (is_upper(c)) has_letter = true;
  }
  return has_letter;
}

struct NameSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t first_token = 0;  // indices into the token vector
  std::size_t last_token = 0;
  bool from_gazetteer = false;
  bool host_marked = false;
  bool recipient_marked = false;
  std::optional<std::string> country_hint;
};

bool word_boundary_before(const std::string& s, std::size_t pos) {
  return pos == 0 || !is_alnum(s[pos - 1]);
}

bool word_boundary_after(const std::string& s, std::size_t pos) {
  return pos >= s.size() || !is_alnum(s[pos]);
}

// Claims gazetteer surfaces as atomic spans, longest surface first.
std::vector<NameSpan> claim_gazetteer_spans(const std::string& s,
                                            const Gazetteer& gazetteer) {
  std::vector<NameSpan> claimed;
  const auto overlaps = [&claimed](std::size_t b, std::size_t e) {
    for (const NameSpan& span : claimed) {
      if (b < span.end && span.begin < e) return true;
    }
    return false;
  };
  for (const std::string& surface : gazetteer.surfaces()) {
    std::size_t from = 0;
    while (true) {
      const std::size_t pos = text::ifind(s, surface, from);
      if (pos == std::string::npos) break;
      const std::size_t end = pos + surface.size();
      if (word_boundary_before(s, pos) && word_boundary_after(s, end) &&
          !overlaps(pos, end)) {
        NameSpan span;
        span.begin = pos;
        span.end = end;
        span.from_gazetteer = true;
        claimed.push_back(span);
      }
      from = pos + 1;
    }
  }
  std::sort(claimed.begin(), claimed.end(),
            [](const NameSpan& a, const NameSpan& b) { return a.begin < b.begin; });
  return claimed;
}

// True when the characters between two offsets are whitespace only.
bool only_whitespace_between(const std::string& s, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (std::isspace(static_cast<unsigned char>(s[i])) == 0) return false;
  }
  return true;
}

// True when the gap is exactly one comma plus whitespace (", ").
bool comma_between(const std::string& s, std::size_t from, std::size_t to) {
  bool seen_comma = false;
  for (std::size_t i = from; i < to; ++i) {
    const char c = s[i];
    if (c == ',') {
      if (seen_comma) return false;
      seen_comma = true;
    } else if (std::isspace(static_cast<unsigned char>(c)) == 0) {
      return false;
    }
  }
  return seen_comma;
}

// Absorbs ", Inc." style corporate suffixes and "(DFG)" style acronym
// parentheticals; records "(UK)" country evidence instead of absorbing.
void absorb_suffixes(const std::string& s, NameSpan& span) {
  while (true) {
    std::size_t i = span.end;
    // ", Inc."
    std::size_t j = i;
    while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j < s.size() && s[j] == ',') {
      std::size_t k = j + 1;
      while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
      std::size_t w = k;
      while (w < s.size() && is_alpha(s[w])) ++w;
      const std::string word = s.substr(k, w - k);
      if (corporate_suffixes().count(word) > 0) {
        if (w < s.size() && s[w] == '.') ++w;
        span.end = w;
        continue;
      }
    }
    // "(DFG)" or "(UK)"
    j = i;
    while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j < s.size() && s[j] == '(') {
      const std::size_t close = s.find(')', j);
      if (close != std::string::npos) {
        const std::string inside = text::trim(s.substr(j + 1, close - j - 1));
        if (harmonize::is_country_designator(inside)) {
          span.country_hint = inside;
          break;
        }
        if (is_acronym(inside, 2) && inside.size() <= 12) {
          span.end = close + 1;
          continue;
        }
      }
    }
    break;
  }
}

void mark_context(const std::vector<Token>& tokens, std::size_t first_token,
                  NameSpan& span) {
  // Up to two tokens before the span: "at [the]" marks a host
  // institution, "to [the]" a support recipient.
  if (first_token == 0) return;
  std::size_t i = first_token - 1;
  std::string prev = text::to_lower(tokens[i].core);
  if (prev == "the" && i > 0) {
    --i;
    prev = text::to_lower(tokens[i].core);
  }
  if (prev == "at") span.host_marked = true;
  if (prev == "to") span.recipient_marked = true;
}

std::vector<NameSpan> detect_name_spans(const std::string& s,
                                        const std::vector<Token>& tokens,
                                        const Gazetteer& gazetteer) {
  std::vector<NameSpan> spans = claim_gazetteer_spans(s, gazetteer);
  const auto claimed_index = [&spans](std::size_t b, std::size_t e) -> int {
    for (std::size_t k = 0; k < spans.size(); ++k) {
      if (b < spans[k].end && spans[k].begin < e) return static_cast<int>(k);
    }
    return -1;
  };

  for (std::size_t i = 0; i < tokens.size();) {
    const Token& t = tokens[i];
    if (claimed_index(t.begin, t.end) >= 0) {
      ++i;
      continue;
    }
    const bool starts = is_capitalized(t.core) && !looks_like_grant_code(t.core) &&
                        !is_dotted_initials(t.raw) &&
                        corporate_suffixes().count(t.core) == 0;
    if (!starts) {
      ++i;
      continue;
    }
    NameSpan span;
    span.begin = t.begin;
    span.end = t.begin + t.core.size();
    span.first_token = i;
    span.last_token = i;
    std::size_t j = i + 1;
    while (j < tokens.size()) {
      const Token& next = tokens[j];
      if (claimed_index(next.begin, next.end) >= 0) break;
      if (!only_whitespace_between(s, tokens[j - 1].end, next.begin)) break;
      if (is_connector(next.core)) {
        // A connector run must lead to another capitalized token.
        std::size_t k = j + 1;
        while (k < tokens.size() && is_connector(tokens[k].core) &&
               only_whitespace_between(s, tokens[k - 1].end, tokens[k].begin)) {
          ++k;
        }
        if (k >= tokens.size() || claimed_index(tokens[k].begin, tokens[k].end) >= 0 ||
            !only_whitespace_between(s, tokens[k - 1].end, tokens[k].begin) ||
            !is_capitalized(tokens[k].core) || looks_like_grant_code(tokens[k].core) ||
            is_dotted_initials(tokens[k].raw)) {
          break;
        }
        j = k;
        continue;
      }
      if (!is_capitalized(next.core) || looks_like_grant_code(next.core) ||
          is_dotted_initials(next.raw)) {
        break;
      }
      span.end = next.begin + next.core.size();
      span.last_token = j;
      ++j;
    }
    spans.push_back(span);
    i = span.last_token + 1;
  }

  std::sort(spans.begin(), spans.end(),
            [](const NameSpan& a, const NameSpan& b) { return a.begin < b.begin; });
  for (NameSpan& span : spans) absorb_suffixes(s, span);

  // Absorption can swallow a shorter span ("Deutsche Forschungsgemeinschaft"
  // absorbing "(DFG)" covers a claimed "DFG"); contained spans go.
  std::vector<NameSpan> outer;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < spans.size() && !contained; ++j) {
      if (j == i) continue;
      const bool inside =
          spans[j].begin <= spans[i].begin && spans[i].end <= spans[j].end;
      const bool strictly_larger =
          spans[j].end - spans[j].begin > spans[i].end - spans[i].begin;
      contained = inside && (strictly_larger || j < i);
    }
    if (!contained) outer.push_back(spans[i]);
  }
  spans.swap(outer);

  // Surface filters and context markers.
  std::vector<NameSpan> kept;
  for (NameSpan& span : spans) {
    if (!span.from_gazetteer) {
      const Token& first = tokens[span.first_token];
      if (honorifics().count(first.core) > 0) continue;
      const bool single_token = span.first_token == span.last_token &&
                                span.end <= first.end;
      const std::string surface = s.substr(span.begin, span.end - span.begin);
      if (harmonize::is_country_designator(surface)) continue;
      if (single_token && !is_acronym(first.core, 3)) continue;
      const std::string first_lower = text::to_lower(first.core);
      if (instrument_words().count(first_lower) > 0) {
        bool has_org_word = false;
        for (std::size_t k = span.first_token + 1; k <= span.last_token; ++k) {
          if (organization_words().count(text::to_lower(tokens[k].core)) > 0) {
            has_org_word = true;
            break;
          }
        }
        if (!has_org_word) continue;
      }
    }
    std::size_t first_token = span.first_token;
    if (span.from_gazetteer) {
      // Locate the first token at or after the claimed region.
      first_token = 0;
      while (first_token < tokens.size() && tokens[first_token].begin < span.begin) {
        ++first_token;
      }
    }
    mark_context(tokens, first_token, span);
    kept.push_back(span);
  }

  // Comma-joined chains of names read as unit-to-parent affiliations
  // ("Agency X, Ministry Y"): only the last element and any gazetteer
  // members survive. Conjunctions or other punctuation break the chain.
  std::vector<bool> drop(kept.size(), false);
  std::size_t chain_start = 0;
  for (std::size_t i = 1; i <= kept.size(); ++i) {
    const bool continues =
        i < kept.size() && comma_between(s, kept[i - 1].end, kept[i].begin);
    if (continues) continue;
    if (i - chain_start >= 2) {
      for (std::size_t k = chain_start; k + 1 < i; ++k) {
        if (!kept[k].from_gazetteer) drop[k] = true;
      }
    }
    chain_start = i;
  }
  std::vector<NameSpan> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!drop[i]) out.push_back(kept[i]);
  }
  return out;
}

// Merges runs of adjacent grant-code tokens ("R01 ES014403") and attaches
// them to the nearest preceding mention in the same statement.
void attach_grant_codes(const std::string& s, const std::vector<Token>& tokens,
                        std::vector<FunderMention>& mentions) {
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!looks_like_grant_code(tokens[i].core)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::string code = tokens[i].core;
    while (j + 1 < tokens.size() && looks_like_grant_code(tokens[j + 1].core) &&
           only_whitespace_between(s, tokens[j].end, tokens[j + 1].begin)) {
      ++j;
      code += " " + tokens[j].core;
    }
    const std::size_t code_begin = tokens[i].begin;
    const std::size_t code_end = tokens[j].end;
    // Tokens inside a mention span belong to the name, not to the list.
    bool inside_mention = false;
    FunderMention* nearest = nullptr;
    for (FunderMention& mention : mentions) {
      if (code_begin < mention.end && mention.begin < code_end) inside_mention = true;
      if (mention.end <= code_begin &&
          (nearest == nullptr || mention.begin > nearest->begin)) {
        nearest = &mention;
      }
    }
    if (!inside_mention && nearest != nullptr) {
      nearest->grant_codes.push_back(code);
    }
    i = j + 1;
  }
}

}  // namespace

std::string to_string(Support s) {
  switch (s) {
    case Support::financial: return "financial";
    case Support::non_financial: return "non_financial";
    case Support::ambiguous: return "ambiguous";
  }
  return "ambiguous";
}

Gazetteer::Gazetteer(std::vector<std::string> surfaces)
    : surfaces_(std::move(surfaces)) {
  std::erase_if(surfaces_, [](const std::string& s) { return s.size() < 3; });
  std::sort(surfaces_.begin(), surfaces_.end(),
            [](const std::string& a, const std::string& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  surfaces_.erase(std::unique(surfaces_.begin(), surfaces_.end()), surfaces_.end());
}

std::vector<CueMatch> detect_cues(const paratext::Statement& statement,
                                  const CueTable& cues) {
  return cues.find_matches(statement.text);
}

bool looks_like_grant_code(const std::string& token) {
  if (token.size() < 3) return false;
  bool has_digit = false;
  bool has_separator = false;
  for (char c : token) {
    if (is_digit(c)) has_digit = true;
    if (c == '/' || c == '-') has_separator = true;
    if (!is_alnum(c) && c != '/' && c != '-' && c != '.') return false;
  }
  if (!has_digit) return false;
  if (has_separator) return true;
  // Uppercase-letter prefix followed by a digit: R01, ES014403, MSM0021...
  std::size_t i = 0;
  while (i < token.size() && is_upper(token[i])) ++i;
  return i > 0 && i < token.size() && is_digit(token[i]);
}

std::vector<FunderMention> extract_mentions(
    const std::vector<paratext::Statement>& statements, const CueTable& cues,
    const Gazetteer& gazetteer, Diagnostics& diagnostics) {
  std::vector<FunderMention> mentions;
  for (const paratext::Statement& statement : statements) {
    const std::string& s = statement.text;
    const std::vector<CueMatch> all_matches = cues.find_matches(s);
    // A non-financial or negation wording suppresses any financial
    // reading it overlaps: "has received funding from X" must not fire
    // the "funding from" cue.
    std::vector<CueMatch> matches;
    matches.reserve(all_matches.size());
    for (const CueMatch& m : all_matches) {
      if (m.rule->polarity == CuePolarity::financial) {
        bool suppressed = false;
        for (const CueMatch& n : all_matches) {
          if (n.rule->polarity != CuePolarity::financial && n.begin < m.end &&
              m.begin < n.end) {
            suppressed = true;
            break;
          }
        }
        if (suppressed) continue;
      }
      matches.push_back(m);
    }
    const std::vector<Token> tokens = tokenize(s);
    const std::vector<NameSpan> spans = detect_name_spans(s, tokens, gazetteer);

    const bool negated = std::any_of(matches.begin(), matches.end(), [](const CueMatch& m) {
      return m.rule->polarity == CuePolarity::negation;
    });

    if (!matches.empty() && spans.empty()) {
      bool informative = std::any_of(matches.begin(), matches.end(), [](const CueMatch& m) {
        return m.rule->polarity == CuePolarity::financial;
      });
      if (informative && !negated) {
        diagnostics.add("statement", "funding cue without a detectable name: " + s);
      }
    }

    std::vector<FunderMention> statement_mentions;
    for (const NameSpan& span : spans) {
      FunderMention mention;
      mention.surface = s.substr(span.begin, span.end - span.begin);
      mention.begin = span.begin;
      mention.end = span.end;
      mention.section_kind = statement.section_kind;
      mention.host_marked = span.host_marked;
      mention.recipient_marked = span.recipient_marked;
      mention.country_hint = span.country_hint;
      mention.negated = negated;

      const CueMatch* financial = nullptr;
      const CueMatch* non_financial = nullptr;
      for (const CueMatch& m : matches) {
        if (m.rule->polarity == CuePolarity::negation) continue;
        const bool after = span.begin >= m.anchor_end &&
                           span.begin <= m.anchor_end + kForwardWindow;
        const bool before = span.end <= m.begin && span.end + kBackwardWindow >= m.begin;
        const bool overlaps_anchor = span.begin < m.anchor_end && m.begin < span.end;
        if (overlaps_anchor || (!after && !before)) continue;
        if (m.rule->polarity == CuePolarity::financial) {
          if (financial == nullptr) financial = &m;
        } else if (non_financial == nullptr) {
          non_financial = &m;
        }
      }
      if (financial != nullptr) {
        mention.support = Support::financial;
        mention.cue = financial->rule->pattern;
      } else if (non_financial != nullptr) {
        mention.support = Support::non_financial;
        mention.cue = non_financial->rule->pattern;
      } else {
        mention.support = Support::ambiguous;
      }
      statement_mentions.push_back(std::move(mention));
    }
    attach_grant_codes(s, tokens, statement_mentions);
    mentions.insert(mentions.end(), statement_mentions.begin(), statement_mentions.end());
  }
  return mentions;
}

std::vector<FunderMention> extract_mentions(
    const std::vector<paratext::Statement>& statements, const CueTable& cues) {
  Diagnostics sink;
  return extract_mentions(statements, cues, Gazetteer(), sink);
}

std::vector<FunderMention> resolve_support(std::vector<FunderMention> mentions) {
  std::vector<FunderMention> out;
  for (FunderMention& mention : mentions) {
    if (mention.negated) continue;
    if (mention.recipient_marked) {
      mention.support = Support::non_financial;
    } else if (mention.support == Support::ambiguous) {
      const bool upgrade = mention.section_kind == paratext::SectionKind::funding &&
                           !mention.host_marked;
      mention.support = upgrade ? Support::financial : Support::non_financial;
    }
    out.push_back(std::move(mention));
  }
  return out;
}

std::set<std::string> dedupe(const std::vector<FunderMention>& mentions) {
  std::set<std::string> out;
  std::unordered_set<std::string> seen;
  for (const FunderMention& mention : mentions) {
    if (mention.support != Support::financial) continue;
    const std::string key = text::to_lower(text::collapse_whitespace(mention.surface));
    if (seen.insert(key).second) out.insert(text::collapse_whitespace(mention.surface));
  }
  return out;
}

SectionExtraction extract_sections(
    const std::vector<paratext::ParatextSection>& sections,
    const CueTable& cues, const Gazetteer& gazetteer,
    const paratext::HeadingLexicon& lexicon, Diagnostics& diagnostics) {
  SectionExtraction result;
  const auto located = paratext::locate_sections(sections, lexicon, cues);
  std::vector<paratext::Statement> statements;
  for (const auto& section : located) {
    const auto segmented = paratext::segment_statements(section);
    statements.insert(statements.end(), segmented.begin(), segmented.end());
  }
  auto mentions = extract_mentions(statements, cues, gazetteer, diagnostics);
  result.mentions = resolve_support(std::move(mentions));
  result.financial_surfaces = dedupe(result.mentions);
  return result;
}

}  // namespace ackfund::extract
