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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits non-zero when any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ackfund/cli.hpp"
#include "ackfund/corpus.hpp"
#include "ackfund/evaluate.hpp"
#include "ackfund/extract.hpp"
#include "ackfund/harmonize.hpp"
#include "ackfund/landscape.hpp"
#include "ackfund/pipeline.hpp"
#include "fixtures.hpp"
#include "synthetic.hpp"

using namespace ackfund;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  %d  %-28s %s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

bool near(double value, double expected, double tolerance) {
  return std::fabs(value - expected) <= tolerance;
}

// 1. Recall and precision reproduce the published figures to 0.001 and
//    evaluate in under a millisecond.
void criterion_metrics() {
  evaluate::ConfusionCounts medline;
  medline.tp = 1639;
  medline.fn = 2275;
  medline.fp = 73;
  evaluate::ConfusionCounts wos;
  wos.tp = 3524;
  wos.fn = 274;
  wos.fp = 212;

  const auto start = Clock::now();
  const double medline_recall = evaluate::recall(medline);
  const double medline_precision = evaluate::precision(medline);
  const double wos_recall = evaluate::recall(wos);
  const double wos_precision = evaluate::precision(wos);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  const bool values_ok = near(medline_recall, 0.419, 0.001) &&
                         near(medline_precision, 0.957, 0.001) &&
                         near(wos_recall, 0.928, 0.001) &&
                         near(wos_precision, 0.943, 0.001);
  const bool time_ok = elapsed_ms < 1.0;
  std::ostringstream detail;
  detail.precision(4);
  detail << std::fixed << "recall " << medline_recall << "/" << wos_recall
         << ", precision " << medline_precision << "/" << wos_precision << ", "
         << elapsed_ms << " ms";
  report(1, "metric-reproduction", values_ok && time_ok, detail.str());
}

// 2. Omission estimators: products and corpus shares within 0.005.
void criterion_omission() {
  const auto no_ack =
      evaluate::estimate_unreported_funding(0.62, 0.18, std::nullopt, 1310, 7510);
  const auto ack_only =
      evaluate::estimate_unreported_funding(0.84, 0.14, 0.31, 2286, 7510);
  const bool ok = near(no_ack.estimate, 0.112, 0.005) &&
                  near(no_ack.corpus_share, 0.019, 0.005) &&
                  near(ack_only.estimate, 0.036, 0.005) &&
                  near(ack_only.corpus_share, 0.011, 0.005);
  std::ostringstream detail;
  detail.precision(4);
  detail << std::fixed << "estimates " << no_ack.estimate << ", " << ack_only.estimate
         << "; shares " << no_ack.corpus_share << ", " << ack_only.corpus_share;
  report(2, "omission-estimators", ok, detail.str());
}

// 3. The six bundled acknowledgement texts extract exactly; the negated
//    disclosure yields the empty set.
void criterion_fixture_extraction() {
  pipeline::Tables tables;
  tables.aliases = testsupport::sample_alias_table();
  tables.build_gazetteer();
  auto cases = fixtures::acknowledgement_cases();
  cases.push_back(fixtures::negated_disclosure_case());
  int exact = 0;
  std::string first_failure;
  for (const auto& ack_case : cases) {
    Diagnostics diag;
    const auto result =
        extract::extract_sections(ack_case.sections, tables.cues, tables.gazetteer,
                                  tables.headings, diag);
    if (result.financial_surfaces == ack_case.expected_financial) {
      ++exact;
    } else if (first_failure.empty()) {
      first_failure = ack_case.name;
    }
  }
  std::ostringstream detail;
  detail << exact << "/" << cases.size() << " exact";
  if (!first_failure.empty()) detail << ", first failure: " << first_failure;
  report(3, "fixture-extraction", exact == static_cast<int>(cases.size()), detail.str());
}

// 4. Harmonization: language variants collapse, the curated twelve-surface
//    set maps to the hand-known ids, and cardinality never grows across
//    1000 randomized perturbation sets.
void criterion_harmonization() {
  const auto table = testsupport::sample_alias_table();
  const auto german = table.resolve("Deutsche Forschungsgemeinschaft (DFG)");
  const auto english = table.resolve("German Research Foundation");
  bool ok = std::holds_alternative<harmonize::CanonicalFunder>(german) &&
            std::holds_alternative<harmonize::CanonicalFunder>(english) &&
            std::get<harmonize::CanonicalFunder>(german).id ==
                std::get<harmonize::CanonicalFunder>(english).id;

  const std::set<std::string> twelve = {
      "Cancer Research UK", "CANCER RESEARCH UK", "The Cancer Research UK", "CRUK",
      "German Research Foundation", "Deutsche Forschungsgemeinschaft (DFG)", "NIHR",
      "National Institute for Health Research", "Medical Research Council", "MRC",
      "Wellcome Trust", "The Wellcome Trust"};
  const auto harmonized = harmonize::harmonize_set(twelve, table);
  ok = ok && twelve.size() == 12 &&
       harmonized.funder_ids ==
           std::set<std::string>{"cruk", "dfg", "nihr", "mrc", "wellcome"} &&
       harmonized.unresolved.empty();

  std::vector<std::string> surfaces;
  for (const auto& row : testsupport::sample_alias_rows()) surfaces.push_back(row[4]);
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(surfaces.size()) - 1);
  std::uniform_int_distribution<int> set_size(1, 10);
  std::uniform_int_distribution<int> mode(0, 4);
  int cardinality_ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::string> set;
    const int n = set_size(rng);
    for (int k = 0; k < n; ++k) {
      std::string surface = surfaces[static_cast<std::size_t>(pick(rng))];
      switch (mode(rng)) {
        case 0:
          for (char& c : surface)
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
          break;
        case 1:
          for (char& c : surface)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          break;
        case 2: surface = "The " + surface; break;
        case 3: surface += " "; break;
        default: break;
      }
      set.insert(surface);
    }
    const auto result = harmonize::harmonize_set(set, table);
    if (result.funder_ids.size() + result.unresolved.size() <= set.size()) {
      ++cardinality_ok;
    }
  }
  ok = ok && cardinality_ok == 1000;
  std::ostringstream detail;
  detail << "twelve-surface ids " << harmonized.funder_ids.size() << "/5, cardinality "
         << cardinality_ok << "/1000";
  report(4, "harmonization", ok, detail.str());
}

// 5. Co-funding matrices equal a brute-force pairwise oracle on 1000
//    random corpora; symmetry and cell bounds hold throughout.
void criterion_cofunding() {
  std::vector<std::array<std::string, 5>> rows;
  for (int i = 0; i < 8; ++i) {
    const std::string id = "f" + std::to_string(i);
    rows.push_back({id, "Funder " + std::to_string(i), "GB", "uk_public_charity",
                    "Funder " + std::to_string(i)});
  }
  const auto table = harmonize::AliasTable::from_rows(rows);
  std::mt19937 rng(909);
  std::uniform_int_distribution<int> pub_count(0, 50);
  std::uniform_int_distribution<int> funder_count(1, 8);
  std::uniform_int_distribution<int> membership(0, 3);
  int matched = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<landscape::FundedPublication> pubs;
    const int n = pub_count(rng);
    const int funders = funder_count(rng);
    for (int i = 0; i < n; ++i) {
      landscape::FundedPublication pub;
      pub.id = "p" + std::to_string(i);
      for (int f = 0; f < funders; ++f) {
        if (membership(rng) == 0) pub.funder_ids.insert("f" + std::to_string(f));
      }
      pubs.push_back(std::move(pub));
    }
    std::map<std::pair<std::string, std::string>, std::int64_t> oracle;
    for (const auto& pub : pubs) {
      for (const auto& a : pub.funder_ids) {
        for (const auto& b : pub.funder_ids) {
          if (a < b) ++oracle[{a, b}];
        }
      }
    }
    const auto matrix = landscape::cofunding_matrix(pubs, table, "", 1);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < matrix.size(); ++i) index[matrix.funders[i].id] = i;
    bool trial_ok = true;
    for (const auto& [pair, count] : oracle) {
      if (index.count(pair.first) == 0 || index.count(pair.second) == 0 ||
          matrix.cell(index[pair.first], index[pair.second]) != count) {
        trial_ok = false;
      }
    }
    std::int64_t oracle_total = 0;
    for (const auto& [pair, count] : oracle) oracle_total += count;
    std::int64_t matrix_total = 0;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      if (matrix.cell(i, i) != 0) trial_ok = false;
      for (std::size_t j = 0; j < matrix.size(); ++j) {
        if (matrix.cell(i, j) != matrix.cell(j, i)) trial_ok = false;
        if (i < j) {
          matrix_total += matrix.cell(i, j);
          if (matrix.cell(i, j) >
              std::min(matrix.funders[i].pub_count, matrix.funders[j].pub_count)) {
            trial_ok = false;
          }
        }
      }
    }
    if (matrix_total != oracle_total) trial_ok = false;
    if (trial_ok) ++matched;
  }
  std::ostringstream detail;
  detail << matched << "/1000 corpora match the pairwise oracle";
  report(5, "cofunding-oracle", matched == 1000, detail.str());
}

// 6. Topic roll-up: all 31 default tree numbers map to their areas, random
//    descendants map identically, and top-level-only assignments are
//    counted unclassified.
void criterion_mesh_rollup() {
  const auto tree = landscape::MeshTree::defaults();
  bool ok = tree.areas().size() == 31;
  std::mt19937 rng(33);
  std::uniform_int_distribution<int> suffix(1, 999);
  int mapped = 0;
  for (const auto& area : tree.areas()) {
    corpus::MeshAssignment exact;
    exact.descriptor_name = area.label;
    exact.tree_numbers = {area.tree_number};
    corpus::MeshAssignment descendant;
    descendant.descriptor_name = area.label;
    descendant.tree_numbers = {area.tree_number + "." + std::to_string(suffix(rng)) +
                               "." + std::to_string(suffix(rng))};
    const auto exact_areas = landscape::roll_up({exact}, tree);
    const auto descendant_areas = landscape::roll_up({descendant}, tree);
    if (exact_areas == std::set<std::string>{area.abbreviation} &&
        descendant_areas == exact_areas) {
      ++mapped;
    }
  }
  ok = ok && mapped == 31;

  corpus::MeshAssignment top;
  top.descriptor_name = "Neoplasms";
  top.tree_numbers = {"C04"};
  ok = ok && landscape::roll_up({top}, tree).empty();

  landscape::FundedPublication unclassified;
  unclassified.id = "u";
  unclassified.funder_ids = {"f"};
  unclassified.mesh = {top};
  const auto profile = landscape::portfolio_profile("f", {unclassified}, tree);
  ok = ok && profile.unclassified_at_level == 1 && profile.area_shares.empty();

  std::ostringstream detail;
  detail << mapped << "/31 areas, unclassified count " << profile.unclassified_at_level;
  report(6, "mesh-rollup", ok, detail.str());
}

// 7. List-accuracy decomposition holds on generated pair sets and the
//    68-of-100 fixture scores 0.680 exactly.
void criterion_list_accuracy() {
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> pair_count(1, 40);
  std::uniform_int_distribution<int> membership(0, 1);
  int decomposed = 0;
  const int trials = 500;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<evaluate::EvalPair> pairs;
    const int n = pair_count(rng);
    for (int i = 0; i < n; ++i) {
      evaluate::FunderSet sys = {"base"};
      evaluate::FunderSet ref = {"base"};
      for (int f = 0; f < 4; ++f) {
        const std::string id = "f" + std::to_string(f);
        if (membership(rng) != 0) sys.insert(id);
        if (membership(rng) != 0) ref.insert(id);
      }
      pairs.emplace_back(std::move(sys), std::move(ref));
    }
    const auto la = evaluate::list_accuracy(pairs);
    std::int64_t flawed = 0;
    for (const auto& [sys, ref] : pairs) {
      if (sys != ref) ++flawed;
    }
    const double flawed_fraction =
        static_cast<double>(flawed) / static_cast<double>(pairs.size());
    if (std::fabs(la.accuracy + flawed_fraction - 1.0) < 1e-12) ++decomposed;
  }

  std::vector<evaluate::EvalPair> fixture;
  for (int i = 0; i < 68; ++i) fixture.push_back({{"a", "b"}, {"a", "b"}});
  for (int i = 0; i < 22; ++i) fixture.push_back({{"a"}, {"a", "b"}});
  for (int i = 0; i < 10; ++i) fixture.push_back({{"a", "c"}, {"a"}});
  const auto la = evaluate::list_accuracy(fixture);
  const bool fixture_ok = std::fabs(la.accuracy - 0.680) < 1e-12;

  std::ostringstream detail;
  detail.precision(3);
  detail << std::fixed << decomposed << "/" << trials << " decompositions, fixture "
         << la.accuracy;
  report(7, "list-accuracy", decomposed == trials && fixture_ok, detail.str());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path.string() + ">";
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

// 8. Two single-threaded full-pipeline runs over a generated 10,000-record
//    corpus are byte-identical and finish within 60 seconds.
void criterion_determinism_throughput() {
  testsupport::SyntheticOptions options;
  options.record_count = 10000;
  options.seed = 271828;
  const auto records = testsupport::make_corpus(options);

  const fs::path base =
      fs::temp_directory_path() / ("ackfund_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(base);
  const fs::path corpus_path = base / "corpus.jsonl";
  corpus::save_corpus(records, corpus_path.string());
  const std::string aliases = fixtures::repo_path("data/aliases_sample.tsv");

  const auto run_pipeline = [&](const fs::path& out) {
    const std::vector<std::string> common = {
        "--corpus", corpus_path.string(), "--aliases", aliases,
        "--out", out.string(), "--threads", "1"};
    std::vector<std::string> extract_args = {"ackfund", "extract"};
    extract_args.insert(extract_args.end(), common.begin(), common.end());
    std::vector<std::string> evaluate_args = {"ackfund", "evaluate", "--system",
                                              "extractor"};
    evaluate_args.insert(evaluate_args.end(), common.begin(), common.end());
    std::vector<std::string> landscape_args = {"ackfund", "landscape"};
    landscape_args.insert(landscape_args.end(), common.begin(), common.end());
    return cli::run(extract_args) == 0 && cli::run(evaluate_args) == 0 &&
           cli::run(landscape_args) == 0;
  };

  const auto start = Clock::now();
  const bool first_ok = run_pipeline(base / "run1");
  const double first_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  const bool second_ok = run_pipeline(base / "run2");

  bool identical = first_ok && second_ok;
  const std::vector<std::string> outputs = {
      "funders.tsv",        "cohorts.tsv",          "unresolved.tsv",
      "diagnostics.tsv",    "report_extractor.tsv", "report_extractor.json",
      "tallies.tsv",        "major_minor.tsv",      "cofunding.tsv",
      "cofunding.dot",      "landscape_summary.tsv"};
  for (const std::string& name : outputs) {
    if (read_file(base / "run1" / name) != read_file(base / "run2" / name)) {
      identical = false;
    }
  }
  const bool fast_enough = first_seconds < 60.0;
  std::error_code ec;
  fs::remove_all(base, ec);

  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed << "10000 records in " << first_seconds << " s, outputs "
         << (identical ? "identical" : "differ");
  report(8, "determinism-throughput", first_ok && second_ok && identical && fast_enough,
         detail.str());
}

}  // namespace

int main() {
  criterion_metrics();
  criterion_omission();
  criterion_fixture_extraction();
  criterion_harmonization();
  criterion_cofunding();
  criterion_mesh_rollup();
  criterion_list_accuracy();
  criterion_determinism_throughput();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
