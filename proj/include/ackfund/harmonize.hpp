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

#ifndef ACKFUND_HARMONIZE_HPP
#define ACKFUND_HARMONIZE_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ackfund/corpus.hpp"
#include "ackfund/errors.hpp"

namespace ackfund::harmonize {

enum class Sector {
  uk_public_charity,
  non_uk_public_charity,
  industry,
  host_institution,
  unknown,
};

std::string to_string(Sector s);
Sector sector_from_string(const std::string& s);

// Country sentinel for "not known".
inline constexpr const char* kUnknownCountry = "ZZ";

struct CanonicalFunder {
  std::string id;
  std::string canonical_name;
  std::string country = kUnknownCountry;  // ISO 3166-1 alpha-2 or "ZZ"
  Sector sector = Sector::unknown;

  bool operator==(const CanonicalFunder&) const = default;
};

struct Unresolved {
  std::string normal_form;

  bool operator==(const Unresolved&) const = default;
};

using Resolution = std::variant<CanonicalFunder, Unresolved>;

// Lowercases, folds diacritics, drops punctuation (except '&'), strips a
// trailing parenthesized acronym, removes the/of/for, collapses spaces.
std::string normalize_name(const std::string& surface);

// Maps a country word appearing in acknowledgement text ("UK", "United
// States", "Germany", ...) to its ISO alpha-2 code. Empty when unknown.
std::string country_from_text(const std::string& word);
bool is_country_designator(const std::string& word);

class AliasTable {
 public:
  // TSV columns: id, canonical_name, country, sector, alias.
  // Repeated ids add aliases to one funder; '#' lines are comments.
  static AliasTable load(const std::string& path);
  static AliasTable from_rows(
      const std::vector<std::array<std::string, 5>>& rows);

  // Exact lookup on the normal form, then bounded containment fallback
  // (aliases of >= 8 normalized chars; longest alias wins, ties broken by
  // id). Misses return Unresolved with the normal form.
  Resolution resolve(const std::string& surface) const;

  const CanonicalFunder* find(const std::string& funder_id) const;

  // Original alias surfaces (length >= 3), longest first; used by the
  // extractor as a gazetteer of known organization names.
  const std::vector<std::string>& alias_surfaces() const { return surfaces_; }

  std::size_t funder_count() const { return funders_.size(); }
  const std::map<std::string, CanonicalFunder>& funders() const { return funders_; }

 private:
  std::map<std::string, CanonicalFunder> funders_;          // id -> funder
  std::map<std::string, std::string> aliases_;              // normal form -> id
  std::vector<std::pair<std::string, std::string>> long_aliases_;  // fallback, sorted
  std::vector<std::string> surfaces_;

  void index();
};

// Country precedence: alias table, then text evidence, then the
// acknowledging author (first author as fallback), then "ZZ".
std::string assign_country(const Resolution& resolution,
                           const std::optional<std::string>& text_country,
                           const corpus::PublicationRecord& context,
                           std::optional<std::size_t> acknowledging_author_index);

struct HarmonizedSet {
  std::set<std::string> funder_ids;
  std::vector<std::string> unresolved;  // normal forms, sorted, deduplicated
};

HarmonizedSet harmonize_set(const std::set<std::string>& surfaces,
                            const AliasTable& table);

}  // namespace ackfund::harmonize

#endif  // ACKFUND_HARMONIZE_HPP
