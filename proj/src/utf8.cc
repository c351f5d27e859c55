// Copyright 2026 The Synqa Authors.
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

#include "synqa/utf8.h"

namespace synqa::utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Latin Extended-A alternates upper/lower case in pairs, with a few runs
// where the odd code point is the upper-case one.
bool latin_ext_a_upper(char32_t ch) {
  if (ch == 0x130) return true;
  if (ch == 0x131 || ch == 0x138 || ch == 0x149) return false;
  if ((ch >= 0x139 && ch <= 0x148) || (ch >= 0x179 && ch <= 0x17E)) {
    return ch % 2 == 1;
  }
  if (ch == 0x178) return true;
  return ch % 2 == 0;
}

}  // namespace

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int extra;
    char32_t ch;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      extra = 1, ch = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2, ch = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3, ch = b0 & 0x07, min = 0x10000;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + extra >= n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      ch = (ch << 6) | (b & 0x3F);
    }
    if (!ok || ch < min || ch > 0x10FFFF || (ch >= 0xD800 && ch <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(ch);
    i += extra + 1;
  }
  return out;
}

void append(std::string &out, char32_t ch) {
  if (ch < 0x80) {
    out.push_back(static_cast<char>(ch));
  } else if (ch < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (ch >> 6)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else if (ch < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (ch >> 12)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (ch >> 18)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t ch : text) append(out, ch);
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t count = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

bool is_valid(std::string_view text) {
  std::u32string decoded = decode(text);
  return encode(decoded) == text;
}

bool is_space(char32_t ch) {
  switch (ch) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return ch >= 0x2000 && ch <= 0x200A;
  }
}

bool is_digit(char32_t ch) { return ch >= '0' && ch <= '9'; }

bool is_upper(char32_t ch) {
  if (ch < 0x80) return ch >= 'A' && ch <= 'Z';
  if (ch >= 0xC0 && ch <= 0xDE) return ch != 0xD7;
  if (ch >= 0x100 && ch <= 0x17F) return latin_ext_a_upper(ch);
  if (ch >= 0x391 && ch <= 0x3A9) return true;
  if (ch >= 0x400 && ch <= 0x42F) return true;
  return false;
}

bool is_lower(char32_t ch) {
  if (ch < 0x80) return ch >= 'a' && ch <= 'z';
  if (ch >= 0xDF && ch <= 0xFF) return ch != 0xF7;
  if (ch >= 0x100 && ch <= 0x17F) return !latin_ext_a_upper(ch);
  if (ch >= 0x3B1 && ch <= 0x3C9) return true;
  if (ch >= 0x430 && ch <= 0x45F) return true;
  return false;
}

bool is_alpha(char32_t ch) {
  if (ch < 0x80) return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z');
  if (is_upper(ch) || is_lower(ch)) return true;
  if (ch == 0xAA || ch == 0xBA || ch == 0xB5) return true;
  if (ch < 0x180) return false;
  if (is_space(ch)) return false;
  // General punctuation, symbols, arrows, box drawing and CJK punctuation.
  if (ch >= 0x2000 && ch <= 0x2BFF) return false;
  if (ch >= 0x3000 && ch <= 0x303F) return false;
  if (ch >= 0xFE30 && ch <= 0xFE4F) return false;
  if (ch >= 0xFF00 && ch <= 0xFF0F) return false;
  if (ch == 0xFFFD) return false;
  if (ch >= 0x1F000) return false;
  return true;
}

char32_t to_lower(char32_t ch) {
  if (ch < 0x80) return (ch >= 'A' && ch <= 'Z') ? ch + 32 : ch;
  if (ch >= 0xC0 && ch <= 0xDE && ch != 0xD7) return ch + 32;
  if (ch >= 0x100 && ch <= 0x17F && ch != 0x130 && latin_ext_a_upper(ch)) {
    return ch == 0x178 ? 0xFF : ch + 1;
  }
  if (ch >= 0x391 && ch <= 0x3A9) return ch + 32;
  if (ch >= 0x410 && ch <= 0x42F) return ch + 32;
  if (ch >= 0x400 && ch <= 0x40F) return ch + 80;
  return ch;
}

char32_t to_upper(char32_t ch) {
  if (ch < 0x80) return (ch >= 'a' && ch <= 'z') ? ch - 32 : ch;
  if (ch >= 0xE0 && ch <= 0xFE && ch != 0xF7) return ch - 32;
  if (ch == 0xFF) return 0x178;
  if (ch >= 0x100 && ch <= 0x17F && ch != 0x131 && ch != 0x138 &&
      ch != 0x149 && !latin_ext_a_upper(ch)) {
    return ch - 1;
  }
  if (ch >= 0x3B1 && ch <= 0x3C9 && ch != 0x3C2) return ch - 32;
  if (ch >= 0x430 && ch <= 0x44F) return ch - 32;
  if (ch >= 0x450 && ch <= 0x45F) return ch - 80;
  return ch;
}

std::string to_lower(std::string_view text) {
  std::u32string chars = decode(text);
  for (char32_t &ch : chars) ch = to_lower(ch);
  return encode(chars);
}

std::string capitalize(std::string_view text) {
  if (text.empty()) return std::string();
  std::u32string chars = decode(text);
  chars[0] = to_upper(chars[0]);
  return encode(chars);
}

}  // namespace synqa::utf8
