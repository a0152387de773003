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

#ifndef ACKFUND_LANDSCAPE_HPP
#define ACKFUND_LANDSCAPE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ackfund/corpus.hpp"
#include "ackfund/errors.hpp"
#include "ackfund/harmonize.hpp"

namespace ackfund::landscape {

// A record reduced to what the analytics need: its harmonized funder ids
// and its MeSH assignments.
struct FundedPublication {
  std::string id;
  std::set<std::string> funder_ids;
  std::vector<corpus::MeshAssignment> mesh;
};

struct FunderTally {
  std::string funder_id;
  std::int64_t pub_count = 0;
  double share_of_funded = 0.0;  // pub_count / number of funded publications

  bool operator==(const FunderTally&) const = default;
};

// One tally per distinct funder, sorted by pub_count descending, ties by
// id. Shares are taken over publications with a non-empty funder set.
std::vector<FunderTally> tally_funders(const std::vector<FundedPublication>& pubs);

struct MajorMinorSplit {
  std::set<std::string> major;
  std::set<std::string> minor;
};

MajorMinorSplit split_major_minor(const std::vector<FunderTally>& tallies,
                                  double threshold = 0.02);

struct FunderNode {
  std::string id;
  std::string label;
  std::int64_t pub_count = 0;
  harmonize::Sector sector = harmonize::Sector::unknown;
};

struct CoFundingMatrix {
  std::vector<FunderNode> funders;          // row/column order
  std::vector<std::vector<std::int64_t>> counts;  // symmetric, zero diagonal

  std::int64_t cell(std::size_t i, std::size_t j) const { return counts[i][j]; }
  std::size_t size() const { return funders.size(); }
};

using FunderFilter = std::function<bool(const harmonize::CanonicalFunder&)>;

// Joint-acknowledgement counts for funders passing `filter` that appear
// in at least `min_pubs` publications. Cell (i,j) counts publications
// acknowledging both i and j; diagonal is zero by convention. Funders are
// ordered by pub_count descending, ties by id.
CoFundingMatrix cofunding_matrix(const std::vector<FundedPublication>& pubs,
                                 const harmonize::AliasTable& table,
                                 const FunderFilter& filter,
                                 std::int64_t min_pubs = 2);

// Convenience: restrict to funders from one country ("GB", ...); an empty
// code admits every funder known to the table.
CoFundingMatrix cofunding_matrix(const std::vector<FundedPublication>& pubs,
                                 const harmonize::AliasTable& table,
                                 const std::string& scope_country = "",
                                 std::int64_t min_pubs = 2);

enum class GraphFormat { dot, graphml };

GraphFormat graph_format_from_string(const std::string& s);

// Emits nodes (label, pub_count, sector) and the positive cells as
// undirected weighted edges, both sorted by id so output is byte-stable.
std::string export_graph(const CoFundingMatrix& matrix, GraphFormat format);

// The topic tree: named nodes plus the prefix-defined areas publications
// roll up into.
struct MeshArea {
  std::string label;         // full descriptor name
  std::string abbreviation;  // short display label, used as the area key
  std::string tree_number;   // prefix, e.g. "C04.588.274"
};

class MeshTree {
 public:
  // TSV columns: label, abbreviation, tree_number.
  static MeshTree load(const std::string& path);
  static MeshTree defaults();
  static MeshTree from_areas(std::vector<MeshArea> areas);

  const std::vector<MeshArea>& areas() const { return areas_; }
  const std::map<std::string, std::string>& nodes() const { return nodes_; }

 private:
  std::vector<MeshArea> areas_;
  std::map<std::string, std::string> nodes_;  // tree number -> name
};

// Area keys carried by a publication: a tree number hits an area when it
// equals the area prefix or extends it past a dot.
std::set<std::string> roll_up(const std::vector<corpus::MeshAssignment>& assignments,
                              const MeshTree& tree);

struct PortfolioProfile {
  std::string funder_id;
  std::int64_t pub_count = 0;                 // publications acknowledging the funder
  std::map<std::string, double> area_shares;  // area key -> fraction of pub_count
  std::int64_t unclassified_at_level = 0;     // publications with no area hit
};

PortfolioProfile portfolio_profile(const std::string& funder_id,
                                   const std::vector<FundedPublication>& pubs,
                                   const MeshTree& tree);

}  // namespace ackfund::landscape

#endif  // ACKFUND_LANDSCAPE_HPP
