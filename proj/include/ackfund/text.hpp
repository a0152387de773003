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

#ifndef ACKFUND_TEXT_HPP
#define ACKFUND_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ackfund::text {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

// Folds common Latin diacritics to ASCII ("Médecins" -> "Medecins",
// "ß" -> "ss"). Unknown non-ASCII codepoints pass through unchanged.
std::string fold_diacritics(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool is_ascii_upper_alpha(std::string_view s);

// Case-insensitive comparison, ASCII only.
bool iequals(std::string_view a, std::string_view b);

// Case-insensitive search of `needle` in `haystack` starting at `from`.
// Returns std::string::npos when absent.
std::size_t ifind(std::string_view haystack, std::string_view needle,
                  std::size_t from = 0);

}  // namespace ackfund::text

#endif  // ACKFUND_TEXT_HPP
