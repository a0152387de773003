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

#include "ackfund/text.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <unordered_map>

namespace ackfund::text {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// Decodes one UTF-8 codepoint at s[i]; advances i past it. Invalid bytes
// are consumed one at a time and returned as-is.
uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra = 0;
  uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + extra >= s.size()) {
    // Truncated sequence.
    ++i;
    return b0;
  }
  for (int k = 1; k <= extra; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += 1 + extra;
  return cp;
}


// Latin-1 supplement and Latin Extended-A fold table.
const char* fold_codepoint(uint32_t cp) {
  static const std::unordered_map<uint32_t, const char*> table = {
      {0xC0, "A"}, {0xC1, "A"}, {0xC2, "A"}, {0xC3, "A"}, {0xC4, "A"},
      {0xC5, "A"}, {0xC6, "AE"}, {0xC7, "C"}, {0xC8, "E"}, {0xC9, "E"},
      {0xCA, "E"}, {0xCB, "E"}, {0xCC, "I"}, {0xCD, "I"}, {0xCE, "I"},
      {0xCF, "I"}, {0xD0, "D"}, {0xD1, "N"}, {0xD2, "O"}, {0xD3, "O"},
      {0xD4, "O"}, {0xD5, "O"}, {0xD6, "O"}, {0xD8, "O"}, {0xD9, "U"},
      {0xDA, "U"}, {0xDB, "U"}, {0xDC, "U"}, {0xDD, "Y"}, {0xDF, "ss"},
      {0xE0, "a"}, {0xE1, "a"}, {0xE2, "a"}, {0xE3, "a"}, {0xE4, "a"},
      {0xE5, "a"}, {0xE6, "ae"}, {0xE7, "c"}, {0xE8, "e"}, {0xE9, "e"},
      {0xEA, "e"}, {0xEB, "e"}, {0xEC, "i"}, {0xED, "i"}, {0xEE, "i"},
      {0xEF, "i"}, {0xF1, "n"}, {0xF2, "o"}, {0xF3, "o"}, {0xF4, "o"},
      {0xF5, "o"}, {0xF6, "o"}, {0xF8, "o"}, {0xF9, "u"}, {0xFA, "u"},
      {0xFB, "u"}, {0xFC, "u"}, {0xFD, "y"}, {0xFF, "y"},
      {0x100, "A"}, {0x101, "a"}, {0x102, "A"}, {0x103, "a"},
      {0x104, "A"}, {0x105, "a"}, {0x106, "C"}, {0x107, "c"},
      {0x10C, "C"}, {0x10D, "c"}, {0x10E, "D"}, {0x10F, "d"},
      {0x110, "D"}, {0x111, "d"}, {0x112, "E"}, {0x113, "e"},
      {0x118, "E"}, {0x119, "e"}, {0x11A, "E"}, {0x11B, "e"},
      {0x11E, "G"}, {0x11F, "g"}, {0x130, "I"}, {0x131, "i"},
      {0x141, "L"}, {0x142, "l"}, {0x143, "N"}, {0x144, "n"},
      {0x147, "N"}, {0x148, "n"}, {0x150, "O"}, {0x151, "o"},
      {0x152, "OE"}, {0x153, "oe"}, {0x158, "R"}, {0x159, "r"},
      {0x15A, "S"}, {0x15B, "s"}, {0x15E, "S"}, {0x15F, "s"},
      {0x160, "S"}, {0x161, "s"}, {0x162, "T"}, {0x163, "t"},
      {0x164, "T"}, {0x165, "t"}, {0x16E, "U"}, {0x16F, "u"},
      {0x170, "U"}, {0x171, "u"}, {0x179, "Z"}, {0x17A, "z"},
      {0x17B, "Z"}, {0x17C, "z"}, {0x17D, "Z"}, {0x17E, "z"},
  };
  const auto it = table.find(cp);
  return it == table.end() ? nullptr : it->second;
}

}  // namespace

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_space = true;  // suppress leading whitespace
  for (char c : s) {
    if (is_space(static_cast<unsigned char>(c))) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string fold_diacritics(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t start = i;
    const uint32_t cp = decode_utf8(s, i);
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
      continue;
    }
    if (const char* folded = fold_codepoint(cp)) {
      out += folded;
    } else {
      out.append(s.substr(start, i - start));
    }
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t b = 0;
  while (true) {
    const std::size_t e = s.find(sep, b);
    if (e == std::string_view::npos) {
      out.emplace_back(s.substr(b));
      break;
    }
    out.emplace_back(s.substr(b, e - b));
    b = e + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

bool is_ascii_upper_alpha(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < 'A' || c > 'Z') return false;
  }
  return true;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::size_t ifind(std::string_view haystack, std::string_view needle,
                  std::size_t from) {
  if (needle.empty() || needle.size() > haystack.size()) return std::string_view::npos;
  const std::size_t last = haystack.size() - needle.size();
  for (std::size_t i = from; i <= last; ++i) {
    if (iequals(haystack.substr(i, needle.size()), needle)) return i;
  }
  return std::string_view::npos;
}

}  // namespace ackfund::text
