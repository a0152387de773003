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

#include "ackfund/landscape.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "ackfund/text.hpp"

namespace ackfund::landscape {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<FunderTally> tally_funders(const std::vector<FundedPublication>& pubs) {
  std::unordered_map<std::string, std::int64_t> counts;
  std::int64_t funded = 0;
  for (const FundedPublication& pub : pubs) {
    if (pub.funder_ids.empty()) continue;
    ++funded;
    for (const std::string& funder : pub.funder_ids) ++counts[funder];
  }
  std::vector<FunderTally> tallies;
  tallies.reserve(counts.size());
  for (const auto& [funder, count] : counts) {
    FunderTally tally;
    tally.funder_id = funder;
    tally.pub_count = count;
    tally.share_of_funded = static_cast<double>(count) / static_cast<double>(funded);
    tallies.push_back(std::move(tally));
  }
  std::sort(tallies.begin(), tallies.end(), [](const FunderTally& a, const FunderTally& b) {
    if (a.pub_count != b.pub_count) return a.pub_count > b.pub_count;
    return a.funder_id < b.funder_id;
  });
  return tallies;
}

MajorMinorSplit split_major_minor(const std::vector<FunderTally>& tallies,
                                  double threshold) {
  MajorMinorSplit split;
  for (const FunderTally& tally : tallies) {
    if (tally.share_of_funded >= threshold) {
      split.major.insert(tally.funder_id);
    } else {
      split.minor.insert(tally.funder_id);
    }
  }
  return split;
}

CoFundingMatrix cofunding_matrix(const std::vector<FundedPublication>& pubs,
                                 const harmonize::AliasTable& table,
                                 const FunderFilter& filter,
                                 std::int64_t min_pubs) {
  const std::vector<FunderTally> tallies = tally_funders(pubs);
  CoFundingMatrix matrix;
  std::unordered_map<std::string, std::size_t> index;
  for (const FunderTally& tally : tallies) {
    const harmonize::CanonicalFunder* funder = table.find(tally.funder_id);
    if (funder == nullptr) continue;
    if (tally.pub_count < min_pubs) continue;
    if (filter && !filter(*funder)) continue;
    FunderNode node;
    node.id = funder->id;
    node.label = funder->canonical_name;
    node.pub_count = tally.pub_count;
    node.sector = funder->sector;
    index.emplace(node.id, matrix.funders.size());
    matrix.funders.push_back(std::move(node));
  }
  const std::size_t n = matrix.funders.size();
  matrix.counts.assign(n, std::vector<std::int64_t>(n, 0));
  for (const FundedPublication& pub : pubs) {
    std::vector<std::size_t> present;
    for (const std::string& funder : pub.funder_ids) {
      const auto it = index.find(funder);
      if (it != index.end()) present.push_back(it->second);
    }
    std::sort(present.begin(), present.end());
    for (std::size_t a = 0; a < present.size(); ++a) {
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        ++matrix.counts[present[a]][present[b]];
        ++matrix.counts[present[b]][present[a]];
      }
    }
  }
  return matrix;
}

CoFundingMatrix cofunding_matrix(const std::vector<FundedPublication>& pubs,
                                 const harmonize::AliasTable& table,
                                 const std::string& scope_country,
                                 std::int64_t min_pubs) {
  FunderFilter filter;
  if (!scope_country.empty()) {
    filter = [scope_country](const harmonize::CanonicalFunder& f) {
      return f.country == scope_country;
    };
  }
  return cofunding_matrix(pubs, table, filter, min_pubs);
}

GraphFormat graph_format_from_string(const std::string& s) {
  if (s == "dot") return GraphFormat::dot;
  if (s == "graphml") return GraphFormat::graphml;
  throw ValidationError("unknown graph format: " + s);
}

std::string export_graph(const CoFundingMatrix& matrix, GraphFormat format) {
  // Emission order is by id, independent of matrix order.
  std::vector<std::size_t> order(matrix.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&matrix](std::size_t a, std::size_t b) {
    return matrix.funders[a].id < matrix.funders[b].id;
  });

  struct Edge {
    std::string a;
    std::string b;
    std::int64_t weight;
  };
  std::vector<Edge> edges;
  for (std::size_t oa = 0; oa < order.size(); ++oa) {
    for (std::size_t ob = oa + 1; ob < order.size(); ++ob) {
      const std::int64_t w = matrix.cell(order[oa], order[ob]);
      if (w > 0) {
        edges.push_back({matrix.funders[order[oa]].id, matrix.funders[order[ob]].id, w});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });

  std::ostringstream out;
  if (format == GraphFormat::dot) {
    out << "graph cofunding {\n";
    for (std::size_t o : order) {
      const FunderNode& node = matrix.funders[o];
      out << "  \"" << dot_escape(node.id) << "\" [label=\"" << dot_escape(node.label)
          << "\", pubs=" << node.pub_count << ", sector=\""
          << harmonize::to_string(node.sector) << "\"];\n";
    }
    for (const Edge& edge : edges) {
      out << "  \"" << dot_escape(edge.a) << "\" -- \"" << dot_escape(edge.b)
          << "\" [weight=" << edge.weight << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
  out << "  <key id=\"pubs\" for=\"node\" attr.name=\"pubs\" attr.type=\"long\"/>\n";
  out << "  <key id=\"sector\" for=\"node\" attr.name=\"sector\" attr.type=\"string\"/>\n";
  out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
  out << "  <graph id=\"cofunding\" edgedefault=\"undirected\">\n";
  for (std::size_t o : order) {
    const FunderNode& node = matrix.funders[o];
    out << "    <node id=\"" << xml_escape(node.id) << "\">\n";
    out << "      <data key=\"label\">" << xml_escape(node.label) << "</data>\n";
    out << "      <data key=\"pubs\">" << node.pub_count << "</data>\n";
    out << "      <data key=\"sector\">" << harmonize::to_string(node.sector)
        << "</data>\n";
    out << "    </node>\n";
  }
  for (const Edge& edge : edges) {
    out << "    <edge source=\"" << xml_escape(edge.a) << "\" target=\""
        << xml_escape(edge.b) << "\">\n";
    out << "      <data key=\"weight\">" << edge.weight << "</data>\n";
    out << "    </edge>\n";
  }
  out << "  </graph>\n";
  out << "</graphml>\n";
  return out.str();
}

MeshTree MeshTree::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open area table: " + path);
  std::vector<MeshArea> areas;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() != 3) {
      throw ValidationError("area table " + path + " line " + std::to_string(line_no) +
                            ": expected label<TAB>abbreviation<TAB>tree_number");
    }
    areas.push_back({text::trim(cols[0]), text::trim(cols[1]), text::trim(cols[2])});
  }
  return from_areas(std::move(areas));
}

MeshTree MeshTree::from_areas(std::vector<MeshArea> areas) {
  MeshTree tree;
  for (MeshArea& area : areas) {
    if (!corpus::valid_tree_number(area.tree_number)) {
      throw ValidationError("bad area tree number: " + area.tree_number);
    }
    if (area.abbreviation.empty()) area.abbreviation = area.label;
    if (tree.nodes_.count(area.tree_number) > 0) {
      throw ValidationError("duplicate area tree number: " + area.tree_number);
    }
    tree.nodes_.emplace(area.tree_number, area.label);
    tree.areas_.push_back(std::move(area));
  }
  return tree;
}

MeshTree MeshTree::defaults() {
  return from_areas({
      {"Digestive System Neoplasms", "Digestive System", "C04.588.274"},
      {"Urogenital Neoplasms", "Urogenital", "C04.588.945"},
      {"Breast Neoplasms", "Breast", "C04.588.180"},
      {"Head and Neck Neoplasms", "Head & Neck", "C04.588.443"},
      {"Endocrine Gland Neoplasms", "Endocrine Gland", "C04.588.322"},
      {"Thoracic Neoplasms", "Thoracic", "C04.588.894"},
      {"Nervous System Neoplasms", "Nervous System", "C04.588.614"},
      {"Skin Neoplasms", "Skin", "C04.588.805"},
      {"Bone Neoplasms", "Bone", "C04.588.149"},
      {"Soft Tissue Neoplasms", "Soft Tissue", "C04.588.839"},
      {"Eye Neoplasms", "Eye", "C04.588.364"},
      {"Hematologic Neoplasms", "Hematologic", "C04.588.448"},
      {"Abdominal Neoplasms", "Abdominal", "C04.588.33"},
      {"Mammary Neoplasms, Animal", "Mammary (Animal)", "C04.588.531"},
      {"Pelvic Neoplasms", "Pelvic", "C04.588.699"},
      {"Splenic Neoplasms", "Splenic", "C04.588.842"},
      {"Anal Gland Neoplasms", "Anal Gland", "C04.588.83"},
      {"Neoplasms, Glandular and Epithelial", "Glandular & Epithelial", "C04.557.470"},
      {"Neoplasms, Germ Cell and Embryonal", "Germ Cell & Embryonal", "C04.557.465"},
      {"Neoplasms, Nerve Tissue", "Nerve Tissue", "C04.557.580"},
      {"Leukemia", "Leukemia", "C04.557.337"},
      {"Neoplasms, Connective and Soft Tissue", "Connective & Soft Tissue", "C04.557.450"},
      {"Lymphoma", "Lymphoma", "C04.557.386"},
      {"Nevi and Melanomas", "Nevi & Melanomas", "C04.557.665"},
      {"Neoplasms, Plasma Cell", "Plasma Cell", "C04.557.595"},
      {"Neoplasms, Vascular Tissue", "Vascular Tissue", "C04.557.645"},
      {"Neoplasms, Complex and Mixed", "Complex & Mixed", "C04.557.435"},
      {"Neoplasms, Gonadal Tissue", "Gonadal Tissue", "C04.557.475"},
      {"Lymphatic Vessel Tumors", "Lymphatic Vessel Tumors", "C04.557.375"},
      {"Histiocytic Disorders, Malignant", "Histiocytic Disorders, Malignant",
       "C04.557.227"},
      {"Odontogenic Tumors", "Odontogenic Tumors", "C04.557.695"},
  });
}

std::set<std::string> roll_up(const std::vector<corpus::MeshAssignment>& assignments,
                              const MeshTree& tree) {
  std::set<std::string> out;
  for (const MeshArea& area : tree.areas()) {
    const std::string prefix = area.tree_number + ".";
    bool hit = false;
    for (const corpus::MeshAssignment& assignment : assignments) {
      for (const std::string& tn : assignment.tree_numbers) {
        if (tn == area.tree_number || tn.rfind(prefix, 0) == 0) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (hit) out.insert(area.abbreviation);
  }
  return out;
}

PortfolioProfile portfolio_profile(const std::string& funder_id,
                                   const std::vector<FundedPublication>& pubs,
                                   const MeshTree& tree) {
  PortfolioProfile profile;
  profile.funder_id = funder_id;
  std::map<std::string, std::int64_t> hits;
  for (const FundedPublication& pub : pubs) {
    if (pub.funder_ids.count(funder_id) == 0) continue;
    ++profile.pub_count;
    const std::set<std::string> areas = roll_up(pub.mesh, tree);
    if (areas.empty()) ++profile.unclassified_at_level;
    for (const std::string& area : areas) ++hits[area];
  }
  if (profile.pub_count == 0) {
    throw NotFoundError("funder not present in any publication: " + funder_id);
  }
  for (const auto& [area, count] : hits) {
    profile.area_shares[area] =
        static_cast<double>(count) / static_cast<double>(profile.pub_count);
  }
  return profile;
}

}  // namespace ackfund::landscape
