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

#include "ackfund/corpus.hpp"

#include <cctype>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "ackfund/text.hpp"

namespace ackfund::corpus {

using json = nlohmann::ordered_json;

namespace {

const std::unordered_map<std::string, DocType>& doc_type_names() {
  static const std::unordered_map<std::string, DocType> names = {
      {"article", DocType::article},
      {"review", DocType::review},
      {"conference_paper", DocType::conference_paper},
      {"editorial", DocType::editorial},
      {"erratum", DocType::erratum},
      {"note", DocType::note},
      {"letter", DocType::letter},
      {"short_survey", DocType::short_survey},
      {"book", DocType::book},
      {"other", DocType::other},
  };
  return names;
}

bool valid_country_code(const std::string& s) {
  return s.size() == 2 && text::is_ascii_upper_alpha(s);
}

}  // namespace

std::string to_string(DocType t) {
  for (const auto& [name, type] : doc_type_names()) {
    if (type == t) return name;
  }
  return "other";
}

DocType doc_type_from_string(const std::string& s, bool* was_known) {
  const auto it = doc_type_names().find(s);
  if (was_known != nullptr) *was_known = it != doc_type_names().end();
  return it == doc_type_names().end() ? DocType::other : it->second;
}

bool valid_tree_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (std::isalpha(static_cast<unsigned char>(s[i])) == 0) return false;
  ++i;
  bool expect_digit = true;
  bool saw_digit = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (!saw_digit) return false;
      expect_digit = true;
      saw_digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      saw_digit = true;
      expect_digit = false;
    } else {
      return false;
    }
  }
  (void)expect_digit;
  return saw_digit;
}

void validate_record(const PublicationRecord& record) {
  if (record.id.empty()) throw ValidationError("record with empty id");
  if (record.pub_year < 1800 || record.pub_year > 2100) {
    throw ValidationError("record " + record.id + ": pub_year out of range");
  }
  for (const std::string& country : record.author_countries) {
    if (!valid_country_code(country)) {
      throw ValidationError("record " + record.id + ": bad author country '" +
                            country + "'");
    }
  }
  for (const MeshAssignment& mesh : record.mesh_descriptors) {
    if (mesh.tree_numbers.empty()) {
      throw ValidationError("record " + record.id + ": mesh descriptor '" +
                            mesh.descriptor_name + "' has no tree numbers");
    }
    for (const std::string& tn : mesh.tree_numbers) {
      if (!valid_tree_number(tn)) {
        throw ValidationError("record " + record.id + ": bad tree number '" + tn + "'");
      }
    }
  }
  if (record.reference && !record.reference->has_ack_section &&
      !record.reference->funders.empty()) {
    throw ValidationError("record " + record.id +
                          ": reference lists funders without an acknowledgement section");
  }
}

PublicationRecord parse_record_line(const std::string& line,
                                    Diagnostics* diagnostics) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("record line is not an object");

  PublicationRecord record;
  try {
    record.id = doc.at("id").get<std::string>();
    record.pub_year = doc.at("pub_year").get<int>();
    record.journal = doc.value("journal", std::string());
    const std::string doc_type_raw = doc.value("doc_type", std::string("other"));
    bool known_type = false;
    record.doc_type = doc_type_from_string(doc_type_raw, &known_type);
    if (!known_type && diagnostics != nullptr) {
      diagnostics->add(record.id, "unknown doc_type '" + doc_type_raw +
                                      "' mapped to other");
    }
    if (doc.contains("author_countries")) {
      for (const auto& c : doc.at("author_countries")) {
        record.author_countries.push_back(c.get<std::string>());
      }
    }
    if (doc.contains("mesh")) {
      for (const auto& m : doc.at("mesh")) {
        MeshAssignment mesh;
        mesh.descriptor_name = m.at("descriptor_name").get<std::string>();
        for (const auto& tn : m.at("tree_numbers")) {
          mesh.tree_numbers.push_back(tn.get<std::string>());
        }
        record.mesh_descriptors.push_back(std::move(mesh));
      }
    }
    if (doc.contains("sections")) {
      for (const auto& s : doc.at("sections")) {
        paratext::ParatextSection section;
        section.kind = paratext::section_kind_from_string(
            s.value("kind", std::string("other")));
        section.heading = s.value("heading", std::string());
        section.text = s.value("text", std::string());
        record.sections.push_back(std::move(section));
      }
    }
    if (doc.contains("wos_fu") && !doc.at("wos_fu").is_null()) {
      record.wos_fu_raw = doc.at("wos_fu").get<std::string>();
    }
    if (doc.contains("medline_grants") && !doc.at("medline_grants").is_null()) {
      std::vector<std::string> grants;
      for (const auto& g : doc.at("medline_grants")) {
        grants.push_back(g.get<std::string>());
      }
      record.medline_grants_raw = std::move(grants);
    }
    if (doc.contains("reference") && !doc.at("reference").is_null()) {
      ReferenceAnnotation ref;
      ref.has_ack_section = doc.at("reference").value("has_ack", false);
      if (doc.at("reference").contains("funders")) {
        for (const auto& f : doc.at("reference").at("funders")) {
          ref.funders.insert(f.get<std::string>());
        }
      }
      record.reference = std::move(ref);
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad record field: ") + e.what());
  }
  validate_record(record);
  return record;
}

std::string serialize_record(const PublicationRecord& record) {
  json doc;
  doc["id"] = record.id;
  doc["pub_year"] = record.pub_year;
  doc["journal"] = record.journal;
  doc["doc_type"] = to_string(record.doc_type);
  doc["author_countries"] = record.author_countries;
  doc["mesh"] = json::array();
  for (const MeshAssignment& mesh : record.mesh_descriptors) {
    doc["mesh"].push_back(
        {{"descriptor_name", mesh.descriptor_name}, {"tree_numbers", mesh.tree_numbers}});
  }
  doc["sections"] = json::array();
  for (const auto& section : record.sections) {
    doc["sections"].push_back({{"kind", paratext::to_string(section.kind)},
                               {"heading", section.heading},
                               {"text", section.text}});
  }
  if (record.wos_fu_raw) doc["wos_fu"] = *record.wos_fu_raw;
  if (record.medline_grants_raw) doc["medline_grants"] = *record.medline_grants_raw;
  if (record.reference) {
    doc["reference"] = {{"funders", record.reference->funders},
                        {"has_ack", record.reference->has_ack_section}};
  }
  return doc.dump();
}

std::vector<PublicationRecord> load_corpus(const std::string& path,
                                           Diagnostics& diagnostics) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus: " + path);
  std::vector<PublicationRecord> records;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    PublicationRecord record;
    try {
      record = parse_record_line(line, &diagnostics);
    } catch (const ValidationError& e) {
      diagnostics.add("line " + std::to_string(line_no),
                      std::string("skipped malformed record: ") + e.what());
      continue;
    }
    if (!seen.insert(record.id).second) {
      throw ValidationError("duplicate record id '" + record.id + "' at line " +
                            std::to_string(line_no));
    }
    records.push_back(std::move(record));
  }
  if (in.bad()) throw IoError("read failure on corpus: " + path);
  return records;
}

void save_corpus(const std::vector<PublicationRecord>& records,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus: " + path);
  for (const PublicationRecord& record : records) {
    out << serialize_record(record) << '\n';
  }
  if (!out) throw IoError("write failure on corpus: " + path);
}

JoinResult join_by_id(const std::vector<PublicationRecord>& primary,
                      const std::vector<PublicationRecord>& secondary) {
  std::unordered_map<std::string, const PublicationRecord*> by_id;
  for (const PublicationRecord& record : secondary) {
    if (!by_id.emplace(record.id, &record).second) {
      throw ValidationError("duplicate id in secondary input: " + record.id);
    }
  }
  std::unordered_set<std::string> primary_ids;
  JoinResult result;
  for (const PublicationRecord& record : primary) {
    if (!primary_ids.insert(record.id).second) {
      throw ValidationError("duplicate id in primary input: " + record.id);
    }
    const auto it = by_id.find(record.id);
    if (it == by_id.end()) {
      result.unmatched.push_back(record.id);
      continue;
    }
    PublicationRecord joined = record;
    if (!it->second->author_countries.empty()) {
      joined.author_countries = it->second->author_countries;
    }
    joined.doc_type = it->second->doc_type;
    result.joined.push_back(std::move(joined));
  }
  return result;
}

std::vector<ExternalFunderEntry> parse_wos_fu(const std::string& raw,
                                              Diagnostics& diagnostics) {
  std::vector<ExternalFunderEntry> entries;
  const std::string trimmed_raw = text::trim(raw);
  if (trimmed_raw.empty()) return entries;

  // Split on "; " outside brackets. When brackets never balance the depth
  // rule would swallow every later separator, so fall back to naive
  // splitting and let the per-entry handling flag the damage.
  int balance = 0;
  for (char c : trimmed_raw) {
    if (c == '[') ++balance;
    if (c == ']') --balance;
  }
  const bool track_depth = balance == 0;

  std::vector<std::string> chunks;
  std::string current;
  int depth = 0;
  for (std::size_t i = 0; i < trimmed_raw.size(); ++i) {
    const char c = trimmed_raw[i];
    if (track_depth) {
      if (c == '[') ++depth;
      if (c == ']') depth = depth > 0 ? depth - 1 : 0;
    }
    if (depth == 0 && c == ';' && i + 1 < trimmed_raw.size() && trimmed_raw[i + 1] == ' ') {
      chunks.push_back(current);
      current.clear();
      ++i;  // swallow the space
      continue;
    }
    current.push_back(c);
  }
  chunks.push_back(current);

  for (const std::string& chunk : chunks) {
    std::string entry_text = text::trim(chunk);
    if (entry_text.empty()) continue;
    ExternalFunderEntry entry;
    const std::size_t open = entry_text.rfind('[');
    if (!entry_text.empty() && entry_text.back() == ']' && open != std::string::npos) {
      const std::string inside = entry_text.substr(open + 1, entry_text.size() - open - 2);
      for (const std::string& code : text::split(inside, ',')) {
        const std::string t = text::trim(code);
        if (!t.empty()) entry.grant_codes.push_back(t);
      }
      entry.name_raw = text::trim(entry_text.substr(0, open));
    } else {
      if (entry_text.find('[') != std::string::npos ||
          entry_text.find(']') != std::string::npos) {
        diagnostics.add("fu", "unbalanced bracket in entry: " + entry_text);
        // Keep the name, drop the codes.
        const std::size_t bracket = entry_text.find_first_of("[]");
        entry.name_raw = text::trim(entry_text.substr(0, bracket));
      } else {
        entry.name_raw = entry_text;
      }
    }
    if (!entry.name_raw.empty()) entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ExternalFunderEntry> parse_wos_fu(const std::string& raw) {
  Diagnostics sink;
  return parse_wos_fu(raw, sink);
}

std::string serialize_fu(const std::vector<ExternalFunderEntry>& entries) {
  std::vector<std::string> parts;
  parts.reserve(entries.size());
  for (const ExternalFunderEntry& entry : entries) {
    std::string part = entry.name_raw;
    if (!entry.grant_codes.empty()) {
      part += " [" + text::join(entry.grant_codes, ", ") + "]";
    }
    parts.push_back(std::move(part));
  }
  return text::join(parts, "; ");
}

ExternalFunderEntry parse_medline_grant(const std::string& raw) {
  ExternalFunderEntry entry;
  // CODE/SUBAGENCY/AGENCY/COUNTRY; extra slashes fold into the country.
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (fields.size() < 3) {
    const std::size_t slash = raw.find('/', pos);
    if (slash == std::string::npos) break;
    fields.push_back(raw.substr(pos, slash - pos));
    pos = slash + 1;
  }
  fields.push_back(raw.substr(pos));

  const std::string agency = fields.size() >= 3 ? text::trim(fields[2]) : std::string();
  if (agency.empty()) {
    entry.name_raw = text::trim(raw);
    return entry;
  }
  entry.name_raw = agency;
  const std::string code = text::trim(fields[0]);
  if (!code.empty()) entry.grant_codes.push_back(code);
  return entry;
}

std::string to_string(Cohort c) {
  switch (c) {
    case Cohort::funded: return "FUNDED";
    case Cohort::ack_no_funder: return "ACK_NO_FUNDER";
    case Cohort::no_ack: return "NO_ACK";
  }
  return "NO_ACK";
}

Cohort classify_cohort(const PublicationRecord& record,
                       const std::set<std::string>& extracted_funders) {
  if (!extracted_funders.empty()) return Cohort::funded;
  if (!paratext::locate_sections(record.sections).empty()) {
    return Cohort::ack_no_funder;
  }
  return Cohort::no_ack;
}

}  // namespace ackfund::corpus
