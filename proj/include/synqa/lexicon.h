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

// Versioned language tables shipped under data/lexicon: the closed-class
// lexicon, irregular inflections, the common-word list, abbreviations and
// contractions.

#ifndef SYNQA_LEXICON_H_
#define SYNQA_LEXICON_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "synqa/text_types.h"

namespace synqa {

struct Contraction {
  std::string form;       // lower-case, straight apostrophe
  std::string expansion;
};

class Lexicon {
 public:
  // Reads the tables from `dir` (normally <data>/lexicon). Throws IoError
  // for missing files and ParseError for malformed lines.
  static Lexicon load(const std::filesystem::path &dir);

  // Lexicon loaded once from default_data_dir().
  static const Lexicon &shared();

  std::optional<Pos> closed_class(std::string_view word) const;
  std::optional<std::string> irregular_lemma(std::string_view form) const;
  bool is_common_word(std::string_view lower) const;
  bool is_abbreviation(std::string_view token) const;
  bool is_pronoun(std::string_view word) const;

  // Abbreviations sorted longest first, for prefix matching.
  const std::vector<std::u32string> &abbreviations() const {
    return abbreviations_by_length_;
  }
  const std::vector<Contraction> &contractions() const {
    return contractions_;
  }

 private:
  std::unordered_map<std::string, Pos> closed_class_;
  std::unordered_map<std::string, std::string> irregular_;
  std::unordered_set<std::string> common_;
  std::unordered_set<std::string> abbreviations_;
  std::vector<std::u32string> abbreviations_by_length_;
  std::vector<Contraction> contractions_;
};

// Directory holding lexicon/ and templates/. SYNQA_DATA_DIR overrides the
// compiled-in location.
std::filesystem::path default_data_dir();

// Reads a whole file. Throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path &path);

}  // namespace synqa

#endif  // SYNQA_LEXICON_H_
