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

#include "synqa/lexicon.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "synqa/errors.h"
#include "synqa/utf8.h"

#ifndef SYNQA_DEFAULT_DATA_DIR
#define SYNQA_DEFAULT_DATA_DIR "data"
#endif

namespace synqa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

// Calls fn(line_number, fields) for every non-comment line of a table file.
template <typename Fn>
void for_each_row(const std::filesystem::path &path, Fn fn) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = view.find('\t', start);
      fields.emplace_back(trim(view.substr(start, tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    fn(number, fields);
  }
}

}  // namespace

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::filesystem::path default_data_dir() {
  if (const char *env = std::getenv("SYNQA_DATA_DIR"); env && *env) {
    return env;
  }
  return SYNQA_DEFAULT_DATA_DIR;
}

Lexicon Lexicon::load(const std::filesystem::path &dir) {
  Lexicon lex;
  for_each_row(dir / "closed_class.tsv", [&](std::size_t line,
                                             const auto &fields) {
    std::optional<Pos> pos;
    if (fields.size() == 2) pos = parse_pos(fields[1]);
    if (!pos) throw ParseError("expected word<TAB>POS in closed_class.tsv", line);
    lex.closed_class_.emplace(fields[0], *pos);
  });
  for_each_row(dir / "irregular_verbs.tsv", [&](std::size_t line,
                                                const auto &fields) {
    if (fields.size() != 2) {
      throw ParseError("expected form<TAB>lemma in irregular_verbs.tsv", line);
    }
    lex.irregular_.emplace(fields[0], fields[1]);
  });
  for_each_row(dir / "common_words.txt", [&](std::size_t, const auto &fields) {
    lex.common_.insert(fields[0]);
  });
  for_each_row(dir / "abbreviations.txt", [&](std::size_t, const auto &fields) {
    lex.abbreviations_.insert(fields[0]);
    lex.abbreviations_by_length_.push_back(utf8::decode(fields[0]));
  });
  std::stable_sort(lex.abbreviations_by_length_.begin(),
                   lex.abbreviations_by_length_.end(),
                   [](const auto &a, const auto &b) {
                     return a.size() > b.size();
                   });
  for_each_row(dir / "contractions.tsv", [&](std::size_t line,
                                             const auto &fields) {
    if (fields.size() != 2) {
      throw ParseError("expected form<TAB>expansion in contractions.tsv", line);
    }
    lex.contractions_.push_back({fields[0], fields[1]});
  });
  // Longest forms first so "can't" never loses to a shorter prefix.
  std::stable_sort(lex.contractions_.begin(), lex.contractions_.end(),
                   [](const Contraction &a, const Contraction &b) {
                     return a.form.size() > b.form.size();
                   });
  return lex;
}

const Lexicon &Lexicon::shared() {
  static const Lexicon lexicon = load(default_data_dir() / "lexicon");
  return lexicon;
}

std::optional<Pos> Lexicon::closed_class(std::string_view word) const {
  auto it = closed_class_.find(std::string(word));
  if (it == closed_class_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::irregular_lemma(
    std::string_view form) const {
  auto it = irregular_.find(std::string(form));
  if (it == irregular_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_common_word(std::string_view lower) const {
  return common_.count(std::string(lower)) > 0;
}

bool Lexicon::is_abbreviation(std::string_view token) const {
  return abbreviations_.count(std::string(token)) > 0;
}

bool Lexicon::is_pronoun(std::string_view word) const {
  auto pos = closed_class(utf8::to_lower(word));
  if (!pos && word == "I") pos = closed_class(word);
  return pos == Pos::PRON;
}

}  // namespace synqa
