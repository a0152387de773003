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

#ifndef ACKFUND_CLI_HPP
#define ACKFUND_CLI_HPP

#include <string>
#include <vector>

namespace ackfund::cli {

// Exit codes: 0 success, 1 validation or undefined metric, 2 I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
  std::string corpus_path;
  std::string alias_table_path;
  std::string cue_table_path;   // empty: embedded defaults
  std::string mesh_area_path;   // empty: embedded defaults
  std::string output_dir = ".";
  double threshold_major = 0.02;
  int min_pubs_network = 2;
  std::string system;           // wos | medline | extractor
  std::string scope_country;
  std::string graph_format = "dot";
  std::string funder_id;        // for the profile subcommand
  int threads = 1;
};

// Entry point used by the binary and by tests; argv[0] is the program
// name. Output lands in --out (overridden by the ACKFUND_OUT environment
// variable when set).
int run(const std::vector<std::string>& args);

}  // namespace ackfund::cli

#endif  // ACKFUND_CLI_HPP
