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

#include "ackfund/harmonize.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "ackfund/text.hpp"

namespace ackfund::harmonize {

namespace {

// Minimum normalized alias length admitted to containment fallback.
constexpr std::size_t kContainmentMinLength = 8;

// Strips one trailing "(ABC)" acronym group, e.g. "Deutsche
// Forschungsgemeinschaft (DFG)".
std::string strip_acronym_suffix(const std::string& s) {
  const std::string trimmed = text::trim(s);
  if (trimmed.empty() || trimmed.back() != ')') return trimmed;
  const std::size_t open = trimmed.rfind('(');
  if (open == std::string::npos || open == 0) return trimmed;
  const std::string inside = trimmed.substr(open + 1, trimmed.size() - open - 2);
  if (inside.empty() || inside.size() > 12) return trimmed;
  for (char c : inside) {
    if (std::isupper(static_cast<unsigned char>(c)) == 0 &&
        std::isdigit(static_cast<unsigned char>(c)) == 0 && c != '-' && c != '&') {
      return trimmed;
    }
  }
  return text::trim(trimmed.substr(0, open));
}

bool is_stopword(const std::string& token) {
  return token == "the" || token == "of" || token == "for";
}

const std::unordered_map<std::string, std::string>& country_table() {
  // Keyed by lowercase designator as it appears in paratext.
  static const std::unordered_map<std::string, std::string> table = {
      {"uk", "GB"}, {"united kingdom", "GB"}, {"great britain", "GB"},
      {"england", "GB"}, {"scotland", "GB"}, {"wales", "GB"},
      {"us", "US"}, {"usa", "US"}, {"united states", "US"},
      {"united states of america", "US"},
      {"germany", "DE"}, {"france", "FR"}, {"italy", "IT"}, {"spain", "ES"},
      {"japan", "JP"}, {"china", "CN"}, {"india", "IN"}, {"brazil", "BR"},
      {"canada", "CA"}, {"australia", "AU"}, {"netherlands", "NL"},
      {"the netherlands", "NL"}, {"belgium", "BE"}, {"switzerland", "CH"},
      {"austria", "AT"}, {"sweden", "SE"}, {"norway", "NO"}, {"denmark", "DK"},
      {"finland", "FI"}, {"ireland", "IE"}, {"portugal", "PT"},
      {"greece", "GR"}, {"poland", "PL"}, {"czech republic", "CZ"},
      {"romania", "RO"}, {"hungary", "HU"}, {"russia", "RU"},
      {"turkey", "TR"}, {"israel", "IL"}, {"south korea", "KR"},
      {"korea", "KR"}, {"taiwan", "TW"}, {"singapore", "SG"},
      {"new zealand", "NZ"}, {"south africa", "ZA"}, {"mexico", "MX"},
      {"argentina", "AR"}, {"eu", "EU"}, {"european union", "EU"},
  };
  return table;
}

}  // namespace

std::string to_string(Sector s) {
  switch (s) {
    case Sector::uk_public_charity: return "uk_public_charity";
    case Sector::non_uk_public_charity: return "non_uk_public_charity";
    case Sector::industry: return "industry";
    case Sector::host_institution: return "host_institution";
    case Sector::unknown: return "unknown";
  }
  return "unknown";
}

Sector sector_from_string(const std::string& s) {
  if (s == "uk_public_charity") return Sector::uk_public_charity;
  if (s == "non_uk_public_charity") return Sector::non_uk_public_charity;
  if (s == "industry") return Sector::industry;
  if (s == "host_institution") return Sector::host_institution;
  if (s == "unknown") return Sector::unknown;
  throw ValidationError("unknown sector: " + s);
}

std::string normalize_name(const std::string& surface) {
  std::string s = strip_acronym_suffix(surface);
  s = text::fold_diacritics(s);
  s = text::to_lower(s);
  std::string no_punct;
  no_punct.reserve(s.size());
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '&' || c == ' ' ||
        std::isspace(static_cast<unsigned char>(c)) != 0) {
      no_punct.push_back(c);
    } else {
      no_punct.push_back(' ');
    }
  }
  std::string out;
  for (const std::string& token : text::split(text::collapse_whitespace(no_punct), ' ')) {
    if (token.empty() || is_stopword(token)) continue;
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::string country_from_text(const std::string& word) {
  const auto it = country_table().find(text::to_lower(text::trim(word)));
  if (it == country_table().end()) return std::string();
  // "EU" names a bloc, not an ISO country; it is a designator but not a
  // country assignment.
  if (it->second == "EU") return std::string();
  return it->second;
}

bool is_country_designator(const std::string& word) {
  return country_table().count(text::to_lower(text::trim(word))) > 0;
}

AliasTable AliasTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open alias table: " + path);
  std::vector<std::array<std::string, 5>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() != 5) {
      throw ValidationError("alias table " + path + " line " + std::to_string(line_no) +
                            ": expected 5 tab-separated columns");
    }
    rows.push_back({text::trim(cols[0]), text::trim(cols[1]), text::trim(cols[2]),
                    text::trim(cols[3]), text::trim(cols[4])});
  }
  return from_rows(rows);
}

AliasTable AliasTable::from_rows(
    const std::vector<std::array<std::string, 5>>& rows) {
  AliasTable table;
  for (const auto& row : rows) {
    const std::string& id = row[0];
    if (id.empty()) throw ValidationError("alias row with empty funder id");
    const auto it = table.funders_.find(id);
    if (it == table.funders_.end()) {
      CanonicalFunder funder;
      funder.id = id;
      funder.canonical_name = row[1];
      funder.country = row[2].empty() ? kUnknownCountry : row[2];
      if (funder.country != kUnknownCountry &&
          (funder.country.size() != 2 || !text::is_ascii_upper_alpha(funder.country))) {
        throw ValidationError("funder " + id + ": bad country '" + row[2] + "'");
      }
      funder.sector = row[3].empty() ? Sector::unknown : sector_from_string(row[3]);
      table.funders_.emplace(id, std::move(funder));
    }
    const std::string alias = row[4].empty() ? row[1] : row[4];
    const std::string normal = normalize_name(alias);
    if (normal.empty()) continue;
    const auto [pos, inserted] = table.aliases_.emplace(normal, id);
    if (!inserted && pos->second != id) {
      throw ValidationError("alias '" + alias + "' maps to both '" + pos->second +
                            "' and '" + id + "'");
    }
    if (alias.size() >= 3) table.surfaces_.push_back(alias);
  }
  // Every funder owns at least its own name as an alias.
  for (auto& [id, funder] : table.funders_) {
    const std::string normal = normalize_name(funder.canonical_name);
    if (!normal.empty()) table.aliases_.emplace(normal, id);
  }
  table.index();
  return table;
}

void AliasTable::index() {
  long_aliases_.clear();
  for (const auto& [normal, id] : aliases_) {
    if (normal.size() >= kContainmentMinLength) {
      long_aliases_.emplace_back(normal, id);
    }
  }
  // Longest first so the containment fallback prefers the most specific
  // alias; ties resolve lexicographically by alias then id.
  std::sort(long_aliases_.begin(), long_aliases_.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  std::sort(surfaces_.begin(), surfaces_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  surfaces_.erase(std::unique(surfaces_.begin(), surfaces_.end()), surfaces_.end());
}

namespace {

// Whole-token containment: "ministry education" is inside "romanian
// ministry education" but not inside "administry education".
bool token_contains(const std::string& outer, const std::string& inner) {
  if (inner.size() >= outer.size()) return false;
  const std::string padded_outer = " " + outer + " ";
  const std::string padded_inner = " " + inner + " ";
  return padded_outer.find(padded_inner) != std::string::npos;
}

}  // namespace

Resolution AliasTable::resolve(const std::string& surface) const {
  const std::string normal = normalize_name(surface);
  const auto it = aliases_.find(normal);
  if (it != aliases_.end()) {
    return *find(it->second);
  }
  for (const auto& [alias, id] : long_aliases_) {
    const bool alias_in_normal = token_contains(normal, alias);
    const bool normal_in_alias =
        normal.size() >= kContainmentMinLength && token_contains(alias, normal);
    if (alias_in_normal || normal_in_alias) {
      return *find(id);
    }
  }
  return Unresolved{normal};
}

const CanonicalFunder* AliasTable::find(const std::string& funder_id) const {
  const auto it = funders_.find(funder_id);
  return it == funders_.end() ? nullptr : &it->second;
}

std::string assign_country(const Resolution& resolution,
                           const std::optional<std::string>& text_country,
                           const corpus::PublicationRecord& context,
                           std::optional<std::size_t> acknowledging_author_index) {
  if (const auto* funder = std::get_if<CanonicalFunder>(&resolution)) {
    if (funder->country != kUnknownCountry) return funder->country;
  }
  if (text_country) {
    const std::string code = country_from_text(*text_country);
    if (!code.empty()) return code;
    // Already an ISO code?
    const std::string trimmed = text::trim(*text_country);
    if (trimmed.size() == 2 && text::is_ascii_upper_alpha(trimmed)) return trimmed;
  }
  if (acknowledging_author_index &&
      *acknowledging_author_index < context.author_countries.size()) {
    return context.author_countries[*acknowledging_author_index];
  }
  if (!context.author_countries.empty()) return context.author_countries.front();
  return kUnknownCountry;
}

HarmonizedSet harmonize_set(const std::set<std::string>& surfaces,
                            const AliasTable& table) {
  HarmonizedSet out;
  std::set<std::string> unresolved;
  for (const std::string& surface : surfaces) {
    const Resolution r = table.resolve(surface);
    if (const auto* funder = std::get_if<CanonicalFunder>(&r)) {
      out.funder_ids.insert(funder->id);
    } else {
      unresolved.insert(std::get<Unresolved>(r).normal_form);
    }
  }
  out.unresolved.assign(unresolved.begin(), unresolved.end());
  return out;
}

}  // namespace ackfund::harmonize
