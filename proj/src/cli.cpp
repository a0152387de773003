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

#include "ackfund/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ackfund/corpus.hpp"
#include "ackfund/errors.hpp"
#include "ackfund/pipeline.hpp"
#include "ackfund/text.hpp"

namespace ackfund::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string format_fraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void require_readable(const std::string& path, const std::string& what) {
  if (path.empty()) throw ValidationError(what + " path not given");
  if (!fs::exists(path)) throw ValidationError(what + " not found: " + path);
}

// Atomic publish: write next to the target, then rename over it.
void write_file(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IoError("write failure on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot publish " + path.string() + ": " + ec.message());
}

fs::path prepare_output_dir(const RunConfig& config) {
  fs::path dir = config.output_dir.empty() ? "." : config.output_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output dir " + dir.string() + ": " + ec.message());
  return dir;
}

pipeline::Tables load_tables(const RunConfig& config) {
  pipeline::Tables tables;
  require_readable(config.alias_table_path, "alias table");
  tables.aliases = harmonize::AliasTable::load(config.alias_table_path);
  if (!config.cue_table_path.empty()) {
    require_readable(config.cue_table_path, "cue table");
    tables.cues = extract::CueTable::load(config.cue_table_path);
  }
  tables.build_gazetteer();
  return tables;
}

landscape::MeshTree load_tree(const RunConfig& config) {
  if (config.mesh_area_path.empty()) return landscape::MeshTree::defaults();
  require_readable(config.mesh_area_path, "area table");
  return landscape::MeshTree::load(config.mesh_area_path);
}

std::vector<corpus::PublicationRecord> load_corpus_checked(const RunConfig& config,
                                                           Diagnostics& diagnostics) {
  require_readable(config.corpus_path, "corpus");
  return corpus::load_corpus(config.corpus_path, diagnostics);
}

std::string diagnostics_tsv(const Diagnostics& diagnostics) {
  std::vector<Diagnostic> items = diagnostics.items();
  std::sort(items.begin(), items.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.context != b.context) return a.context < b.context;
    return a.message < b.message;
  });
  std::ostringstream out;
  out << "context\tmessage\n";
  for (const Diagnostic& d : items) out << d.context << '\t' << d.message << '\n';
  return out.str();
}

std::string join_sorted(const std::set<std::string>& values) {
  std::vector<std::string> sorted(values.begin(), values.end());
  return text::join(sorted, ",");
}

// Unresolved names enter presence-level evaluation as sentinel entries;
// they never equal a canonical reference id.
std::set<std::string> system_set(const harmonize::HarmonizedSet& harmonized) {
  std::set<std::string> out = harmonized.funder_ids;
  for (const std::string& normal : harmonized.unresolved) out.insert("?" + normal);
  return out;
}

int cmd_extract(const RunConfig& config) {
  Diagnostics diagnostics;
  const auto records = load_corpus_checked(config, diagnostics);
  const pipeline::Tables tables = load_tables(config);
  const fs::path out_dir = prepare_output_dir(config);

  const auto results = pipeline::run_extraction(records, tables, config.threads);

  std::ostringstream funders;
  funders << "id\tfunders\tunresolved\n";
  std::map<std::string, std::int64_t> unresolved_counts;
  for (const auto& result : results) {
    std::vector<std::string> unresolved = result.unresolved;
    funders << result.id << '\t' << join_sorted(result.funder_ids) << '\t'
            << text::join(unresolved, ",") << '\n';
    for (const std::string& normal : unresolved) ++unresolved_counts[normal];
    diagnostics.merge(result.diagnostics);
  }
  write_file(out_dir / "funders.tsv", funders.str());

  const pipeline::CohortSummary summary = pipeline::summarize_cohorts(results);
  std::ostringstream cohorts;
  cohorts << "cohort\tcount\tshare\n";
  const double total = std::max<std::int64_t>(summary.total(), 1);
  cohorts << "FUNDED\t" << summary.funded << '\t'
          << format_fraction(summary.funded / total) << '\n';
  cohorts << "ACK_NO_FUNDER\t" << summary.ack_no_funder << '\t'
          << format_fraction(summary.ack_no_funder / total) << '\n';
  cohorts << "NO_ACK\t" << summary.no_ack << '\t'
          << format_fraction(summary.no_ack / total) << '\n';
  write_file(out_dir / "cohorts.tsv", cohorts.str());

  std::ostringstream unresolved;
  unresolved << "normal_form\toccurrences\n";
  for (const auto& [normal, count] : unresolved_counts) {
    unresolved << normal << '\t' << count << '\n';
  }
  write_file(out_dir / "unresolved.tsv", unresolved.str());
  write_file(out_dir / "diagnostics.tsv", diagnostics_tsv(diagnostics));

  std::cerr << "extracted " << records.size() << " records, " << summary.funded
            << " funded, " << diagnostics.count() << " diagnostics\n";
  return kExitOk;
}

int cmd_evaluate(const RunConfig& config) {
  Diagnostics diagnostics;
  const auto records = load_corpus_checked(config, diagnostics);
  const pipeline::Tables tables = load_tables(config);
  const fs::path out_dir = prepare_output_dir(config);

  std::vector<evaluate::EvalPair> pairs;
  std::int64_t skipped_no_reference = 0;
  std::vector<const corpus::PublicationRecord*> with_reference;
  for (const auto& record : records) {
    if (!record.reference) {
      ++skipped_no_reference;
      diagnostics.add(record.id, "no reference annotation, excluded from evaluation");
      continue;
    }
    with_reference.push_back(&record);
  }

  for (const corpus::PublicationRecord* record : with_reference) {
    std::set<std::string> surfaces;
    if (config.system == "wos") {
      for (const auto& entry :
           corpus::parse_wos_fu(record->wos_fu_raw.value_or(""), diagnostics)) {
        surfaces.insert(entry.name_raw);
      }
    } else if (config.system == "medline") {
      if (record->medline_grants_raw) {
        for (const std::string& grant : *record->medline_grants_raw) {
          if (!text::trim(grant).empty()) {
            surfaces.insert(corpus::parse_medline_grant(grant).name_raw);
          }
        }
      }
    } else if (config.system == "extractor") {
      const auto result = pipeline::extract_record(*record, tables);
      surfaces = result.surfaces;
      diagnostics.merge(result.diagnostics);
    } else {
      throw ValidationError("unknown system: " + config.system);
    }
    pairs.emplace_back(system_set(harmonize::harmonize_set(surfaces, tables.aliases)),
                       record->reference->funders);
  }

  const evaluate::EvaluationReport report = evaluate::build_report(pairs);

  std::int64_t reporting = report.counts.tp + report.counts.fp;
  std::ostringstream tsv;
  tsv << "metric\tvalue\n";
  tsv << "publications\t" << pairs.size() << '\n';
  tsv << "excluded_no_reference\t" << skipped_no_reference << '\n';
  tsv << "reporting_funding\t" << reporting << '\n';
  tsv << "reporting_funding_share\t"
      << format_fraction(pairs.empty() ? 0.0
                                       : static_cast<double>(reporting) /
                                             static_cast<double>(pairs.size()))
      << '\n';
  tsv << "true_positives\t" << report.counts.tp << '\n';
  tsv << "false_positives\t" << report.counts.fp << '\n';
  tsv << "false_negatives\t" << report.counts.fn << '\n';
  tsv << "true_negatives\t" << report.counts.tn << '\n';
  tsv << "recall\t" << format_fraction(report.recall) << '\n';
  tsv << "precision\t" << format_fraction(report.precision) << '\n';
  tsv << "distinct_funders\t" << report.distinct_funders << '\n';
  tsv << "mean_funders_per_pub\t" << format_fraction(report.mean_funders) << '\n';
  tsv << "std_funders_per_pub\t" << format_fraction(report.std_funders) << '\n';
  tsv << "max_funders_per_pub\t" << report.max_funders << '\n';
  tsv << "list_accuracy\t" << format_fraction(report.list_accuracy) << '\n';
  tsv << "missed_any\t" << format_fraction(report.missed_any) << '\n';
  tsv << "extra_any\t" << format_fraction(report.extra_any) << '\n';
  write_file(out_dir / ("report_" + config.system + ".tsv"), tsv.str());

  json doc;
  doc["system"] = config.system;
  doc["publications"] = pairs.size();
  doc["excluded_no_reference"] = skipped_no_reference;
  doc["counts"] = {{"tp", report.counts.tp},
                   {"fp", report.counts.fp},
                   {"fn", report.counts.fn},
                   {"tn", report.counts.tn}};
  doc["recall"] = format_fraction(report.recall);
  doc["precision"] = format_fraction(report.precision);
  doc["distinct_funders"] = report.distinct_funders;
  doc["mean_funders_per_pub"] = format_fraction(report.mean_funders);
  doc["std_funders_per_pub"] = format_fraction(report.std_funders);
  doc["max_funders_per_pub"] = report.max_funders;
  doc["list_accuracy"] = format_fraction(report.list_accuracy);
  doc["missed_any"] = format_fraction(report.missed_any);
  doc["extra_any"] = format_fraction(report.extra_any);
  write_file(out_dir / ("report_" + config.system + ".json"), doc.dump(2) + "\n");
  write_file(out_dir / "diagnostics.tsv", diagnostics_tsv(diagnostics));

  std::cerr << "evaluated " << pairs.size() << " records against reference ("
            << skipped_no_reference << " lacked annotations)\n";
  return kExitOk;
}

int cmd_landscape(const RunConfig& config) {
  Diagnostics diagnostics;
  const auto records = load_corpus_checked(config, diagnostics);
  const pipeline::Tables tables = load_tables(config);
  const landscape::MeshTree tree = load_tree(config);
  const fs::path out_dir = prepare_output_dir(config);

  const auto results = pipeline::run_extraction(records, tables, config.threads);
  const auto pubs = pipeline::to_funded_publications(records, results);

  const auto tallies = landscape::tally_funders(pubs);
  std::ostringstream tally_out;
  tally_out << "funder_id\tpub_count\tshare_of_funded\n";
  for (const auto& tally : tallies) {
    tally_out << tally.funder_id << '\t' << tally.pub_count << '\t'
              << format_fraction(tally.share_of_funded) << '\n';
  }
  write_file(out_dir / "tallies.tsv", tally_out.str());

  const auto split = landscape::split_major_minor(tallies, config.threshold_major);
  std::ostringstream split_out;
  split_out << "funder_id\tclass\n";
  for (const auto& tally : tallies) {
    split_out << tally.funder_id << '\t'
              << (split.major.count(tally.funder_id) > 0 ? "major" : "minor") << '\n';
  }
  write_file(out_dir / "major_minor.tsv", split_out.str());

  const auto matrix = landscape::cofunding_matrix(
      pubs, tables.aliases, config.scope_country, config.min_pubs_network);
  std::ostringstream matrix_out;
  matrix_out << "funder_id";
  for (const auto& node : matrix.funders) matrix_out << '\t' << node.id;
  matrix_out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    matrix_out << matrix.funders[i].id;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      matrix_out << '\t' << matrix.cell(i, j);
    }
    matrix_out << '\n';
  }
  write_file(out_dir / "cofunding.tsv", matrix_out.str());

  const landscape::GraphFormat format =
      landscape::graph_format_from_string(config.graph_format);
  const std::string extension = format == landscape::GraphFormat::dot ? ".dot" : ".graphml";
  write_file(out_dir / ("cofunding" + extension),
             landscape::export_graph(matrix, format));

  // Area coverage over funded publications.
  std::int64_t funded = 0;
  std::int64_t unclassified = 0;
  for (const auto& pub : pubs) {
    if (pub.funder_ids.empty()) continue;
    ++funded;
    if (landscape::roll_up(pub.mesh, tree).empty()) ++unclassified;
  }
  std::ostringstream summary_out;
  summary_out << "metric\tvalue\n";
  summary_out << "publications\t" << pubs.size() << '\n';
  summary_out << "funded_publications\t" << funded << '\n';
  summary_out << "major_funders\t" << split.major.size() << '\n';
  summary_out << "minor_funders\t" << split.minor.size() << '\n';
  summary_out << "network_funders\t" << matrix.size() << '\n';
  summary_out << "unclassified_at_level\t" << unclassified << '\n';
  write_file(out_dir / "landscape_summary.tsv", summary_out.str());
  write_file(out_dir / "diagnostics.tsv", diagnostics_tsv(diagnostics));

  std::cerr << "landscape over " << funded << " funded publications, "
            << matrix.size() << " funders in network\n";
  return kExitOk;
}

int cmd_profile(const RunConfig& config) {
  Diagnostics diagnostics;
  const auto records = load_corpus_checked(config, diagnostics);
  const pipeline::Tables tables = load_tables(config);
  const landscape::MeshTree tree = load_tree(config);
  const fs::path out_dir = prepare_output_dir(config);

  if (config.funder_id.empty()) throw ValidationError("--funder is required");

  const auto results = pipeline::run_extraction(records, tables, config.threads);
  const auto pubs = pipeline::to_funded_publications(records, results);
  const auto profile = landscape::portfolio_profile(config.funder_id, pubs, tree);

  std::ostringstream out;
  out << "# funder\t" << profile.funder_id << '\n';
  out << "# publications\t" << profile.pub_count << '\n';
  out << "# unclassified_at_level\t" << profile.unclassified_at_level << '\n';
  out << "area\tshare\n";
  for (const auto& [area, share] : profile.area_shares) {
    out << area << '\t' << format_fraction(share) << '\n';
  }
  write_file(out_dir / ("profile_" + profile.funder_id + ".tsv"), out.str());

  std::cerr << "profiled " << profile.funder_id << " over " << profile.pub_count
            << " publications\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"funding acknowledgement extraction and analytics"};
  app.require_subcommand(1);

  RunConfig config;

  const auto add_common = [&config](CLI::App* cmd, bool with_areas) {
    cmd->add_option("--corpus", config.corpus_path, "line-delimited corpus file")
        ->required();
    cmd->add_option("--aliases", config.alias_table_path, "alias table TSV")->required();
    cmd->add_option("--cues", config.cue_table_path, "cue table TSV (default embedded)");
    if (with_areas) {
      cmd->add_option("--areas", config.mesh_area_path,
                      "topic area table TSV (default embedded)");
    }
    cmd->add_option("--out", config.output_dir, "output directory");
    cmd->add_option("--threads", config.threads, "worker threads (1 = serial)");
  };

  CLI::App* extract_cmd =
      app.add_subcommand("extract", "extract and harmonize funders per record");
  add_common(extract_cmd, false);

  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "score a funding-data system against reference annotations");
  add_common(evaluate_cmd, false);
  evaluate_cmd
      ->add_option("--system", config.system, "wos, medline or extractor")
      ->required();

  CLI::App* landscape_cmd =
      app.add_subcommand("landscape", "funder tallies, co-funding network, splits");
  add_common(landscape_cmd, true);
  landscape_cmd->add_option("--threshold-major", config.threshold_major,
                            "major-funder share threshold");
  landscape_cmd->add_option("--min-pubs", config.min_pubs_network,
                            "minimum publications for network nodes");
  landscape_cmd->add_option("--scope-country", config.scope_country,
                            "restrict network to funders of one country");
  landscape_cmd->add_option("--format", config.graph_format, "graph format: dot, graphml");

  CLI::App* profile_cmd =
      app.add_subcommand("profile", "topic portfolio profile for one funder");
  add_common(profile_cmd, true);
  profile_cmd->add_option("--funder", config.funder_id, "canonical funder id")->required();

  std::vector<std::string> cli_args(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(cli_args.begin(), cli_args.end());
  try {
    app.parse(cli_args);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  if (const char* env_out = std::getenv("ACKFUND_OUT");
      env_out != nullptr && *env_out != '\0') {
    config.output_dir = env_out;
  }
  if (config.threshold_major < 0.0 || config.threshold_major > 1.0) {
    std::cerr << "error: --threshold-major out of [0,1]\n";
    return kExitValidation;
  }

  try {
    if (extract_cmd->parsed()) return cmd_extract(config);
    if (evaluate_cmd->parsed()) return cmd_evaluate(config);
    if (landscape_cmd->parsed()) return cmd_landscape(config);
    if (profile_cmd->parsed()) return cmd_profile(config);
    std::cerr << "error: no subcommand\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const MetricUndefinedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace ackfund::cli
