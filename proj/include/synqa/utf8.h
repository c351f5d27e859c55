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

// UTF-8 decoding and the small amount of character classification the
// pipeline needs. All offsets exposed by the library count code points.

#ifndef SYNQA_UTF8_H_
#define SYNQA_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace synqa::utf8 {

// Decodes UTF-8. Ill-formed sequences decode to U+FFFD, one per bad byte.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
void append(std::string &out, char32_t ch);

// Number of code points in `text`.
std::size_t length(std::string_view text);

bool is_valid(std::string_view text);

bool is_space(char32_t ch);
bool is_digit(char32_t ch);
bool is_upper(char32_t ch);
bool is_lower(char32_t ch);
bool is_alpha(char32_t ch);
inline bool is_alnum(char32_t ch) { return is_alpha(ch) || is_digit(ch); }

char32_t to_lower(char32_t ch);
char32_t to_upper(char32_t ch);

std::string to_lower(std::string_view text);

// Upper-cases the first code point of `text`.
std::string capitalize(std::string_view text);

}  // namespace synqa::utf8

#endif  // SYNQA_UTF8_H_
