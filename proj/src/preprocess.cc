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

#include "synqa/preprocess.h"

#include <algorithm>

#include "synqa/utf8.h"

namespace synqa {

namespace {

bool is_terminator(char32_t ch) { return ch == '.' || ch == '?' || ch == '!'; }
bool is_closer(char32_t ch) {
  return ch == '"' || ch == '\'' || ch == ')' || ch == ']';
}
bool is_opener(char32_t ch) {
  return ch == '"' || ch == '\'' || ch == '(' || ch == '[';
}

char32_t fold_quote(char32_t ch) {
  switch (ch) {
    case 0x2018: case 0x2019: case 0x201A: case 0x201B: case 0x2032:
      return '\'';
    case 0x201C: case 0x201D: case 0x201E: case 0x201F: case 0x2033:
      return '"';
    default:
      return ch;
  }
}

bool word_char(char32_t ch) { return utf8::is_alnum(ch) || ch == '\''; }

// Tries to match `form` at text[pos]; the first letter may be upper-case.
bool match_contraction(const std::u32string &text, std::size_t pos,
                       const std::u32string &form) {
  if (pos + form.size() > text.size()) return false;
  if (utf8::to_lower(text[pos]) != form[0]) return false;
  for (std::size_t k = 1; k < form.size(); ++k) {
    if (text[pos + k] != form[k]) return false;
  }
  std::size_t end = pos + form.size();
  return end == text.size() || !word_char(text[end]);
}

}  // namespace

bool is_split_punct(char32_t ch) {
  switch (ch) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '"': case '\'': case '(': case ')': case '[': case ']':
      return true;
    default:
      return false;
  }
}

Normalized normalize(std::string_view raw, const Lexicon &lexicon,
                     const NormalizeOptions &options) {
  Normalized result;
  NormalizationReport &report = result.report;

  std::u32string text = utf8::decode(raw);
  for (char32_t &ch : text) {
    char32_t folded = fold_quote(ch);
    if (folded != ch) {
      ch = folded;
      ++report.quotes_normalized;
    }
    if (options.lowercase) ch = utf8::to_lower(ch);
  }

  std::vector<std::pair<std::u32string, std::u32string>> table;
  for (const Contraction &c : lexicon.contractions()) {
    table.emplace_back(utf8::decode(c.form), utf8::decode(c.expansion));
  }

  std::u32string expanded;
  expanded.reserve(text.size() + text.size() / 8);
  for (std::size_t i = 0; i < text.size();) {
    const bool at_boundary = i == 0 || !word_char(text[i - 1]);
    bool matched = false;
    if (at_boundary && utf8::is_alpha(text[i])) {
      for (const auto &[form, expansion] : table) {
        if (!match_contraction(text, i, form)) continue;
        std::u32string out = expansion;
        if (utf8::is_upper(text[i]) && !utf8::is_upper(form[0])) {
          out[0] = utf8::to_upper(out[0]);
        }
        expanded += out;
        i += form.size();
        ++report.contractions_expanded;
        matched = true;
        break;
      }
    }
    if (!matched) expanded.push_back(text[i++]);
  }

  std::u32string out;
  out.reserve(expanded.size());
  for (std::size_t i = 0; i < expanded.size();) {
    if (!utf8::is_space(expanded[i])) {
      out.push_back(expanded[i++]);
      continue;
    }
    std::size_t j = i;
    std::size_t newlines = 0;
    while (j < expanded.size() && utf8::is_space(expanded[j])) {
      if (expanded[j] == '\n') ++newlines;
      ++j;
    }
    std::u32string_view run(expanded.data() + i, j - i);
    std::u32string_view replacement;
    if (i == 0 || j == expanded.size()) {
      replacement = U"";
    } else if (newlines >= 2) {
      replacement = U"\n\n";
    } else {
      replacement = U" ";
    }
    if (run != replacement) ++report.whitespace_collapsed;
    out += replacement;
    i = j;
  }
  result.text = utf8::encode(out);
  return result;
}

std::vector<Span> paragraphs(std::string_view normalized) {
  const std::u32string text = utf8::decode(normalized);
  std::vector<Span> result;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && utf8::is_space(text[i])) ++i;
    if (i == n) break;
    std::size_t start = i;
    std::size_t last_non_space = i;
    while (i < n) {
      if (!utf8::is_space(text[i])) {
        last_non_space = i++;
        continue;
      }
      std::size_t j = i;
      std::size_t newlines = 0;
      while (j < n && utf8::is_space(text[j])) {
        if (text[j] == '\n') ++newlines;
        ++j;
      }
      if (newlines >= 2) break;
      i = j;
    }
    result.push_back(Span{start, last_non_space + 1});
  }
  return result;
}

std::vector<Span> segment(std::string_view normalized,
                          const Lexicon &lexicon) {
  const std::u32string text = utf8::decode(normalized);
  const std::size_t n = text.size();
  std::vector<Span> spans;

  // Whitespace-delimited word ending at `end` (exclusive), minus openers.
  auto word_before = [&](std::size_t end) {
    std::size_t begin = end;
    while (begin > 0 && !utf8::is_space(text[begin - 1])) --begin;
    while (begin < end && is_opener(text[begin])) ++begin;
    return utf8::encode(std::u32string_view(text).substr(begin, end - begin));
  };

  std::size_t i = 0;
  while (i < n) {
    while (i < n && utf8::is_space(text[i])) ++i;
    if (i == n) break;
    const std::size_t start = i;
    std::size_t end = n;
    while (i < n) {
      char32_t ch = text[i];
      if (utf8::is_space(ch)) {
        std::size_t j = i;
        std::size_t newlines = 0;
        while (j < n && utf8::is_space(text[j])) {
          if (text[j] == '\n') ++newlines;
          ++j;
        }
        if (newlines >= 2) {
          end = i;
          break;
        }
        i = j;
        continue;
      }
      if (!is_terminator(ch)) {
        ++i;
        continue;
      }
      std::size_t k = i;
      while (k < n && is_terminator(text[k])) ++k;
      const bool single_period = ch == '.' && k == i + 1;
      while (k < n && is_closer(text[k])) ++k;
      if (k == n) {
        i = k;
        break;
      }
      if (!utf8::is_space(text[k])) {
        i = k;
        continue;
      }
      std::size_t m = k;
      while (m < n && utf8::is_space(text[m])) ++m;
      while (m < n && is_opener(text[m])) ++m;
      const bool next_starts =
          m < n && (utf8::is_upper(text[m]) || utf8::is_digit(text[m]));
      if (next_starts &&
          !(single_period && lexicon.is_abbreviation(word_before(i + 1)))) {
        end = k;
        i = k;
        break;
      }
      i = k;
    }
    if (end == n) {
      end = n;
      while (end > start && utf8::is_space(text[end - 1])) --end;
    }
    spans.push_back(Span{start, end});
    i = std::max(i, end);
  }
  return spans;
}

std::vector<Token> tokenize(std::string_view sentence_text,
                            const Lexicon &lexicon) {
  const std::u32string text = utf8::decode(sentence_text);
  const std::size_t n = text.size();
  std::vector<Token> tokens;
  auto emit = [&](std::size_t begin, std::size_t end) {
    Token token;
    token.span = Span{begin, end};
    token.text = utf8::encode(std::u32string_view(text).substr(begin, end - begin));
    tokens.push_back(std::move(token));
  };
  // "'s" closing a word: possessive or a leftover contraction.
  auto possessive_at = [&](std::size_t pos, std::size_t chunk_end) {
    return text[pos] == '\'' && pos + 1 < chunk_end && text[pos + 1] == 's' &&
           (pos + 2 == chunk_end || is_split_punct(text[pos + 2])) &&
           pos > 0 && utf8::is_alpha(text[pos - 1]);
  };

  std::size_t i = 0;
  while (i < n) {
    if (utf8::is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t chunk_end = i;
    while (chunk_end < n && !utf8::is_space(text[chunk_end])) ++chunk_end;

    std::size_t pos = i;
    while (pos < chunk_end) {
      const char32_t ch = text[pos];
      if (is_split_punct(ch)) {
        if (possessive_at(pos, chunk_end)) {
          emit(pos, pos + 2);
          pos += 2;
        } else {
          emit(pos, pos + 1);
          ++pos;
        }
        continue;
      }
      const bool word_start = pos == i || !utf8::is_alnum(text[pos - 1]);
      if (word_start) {
        bool abbreviated = false;
        for (const std::u32string &abbr : lexicon.abbreviations()) {
          const std::size_t end = pos + abbr.size();
          if (end > chunk_end) continue;
          if (std::u32string_view(text).substr(pos, abbr.size()) != abbr) continue;
          if (end < chunk_end && utf8::is_alnum(text[end])) continue;
          emit(pos, end);
          pos = end;
          abbreviated = true;
          break;
        }
        if (abbreviated) continue;
      }
      std::size_t end = pos;
      while (end < chunk_end) {
        const char32_t c = text[end];
        if (!is_split_punct(c)) {
          ++end;
          continue;
        }
        const bool digit_inner = (c == '.' || c == ',' || c == ':') &&
                                 end > pos && utf8::is_digit(text[end - 1]) &&
                                 end + 1 < chunk_end &&
                                 utf8::is_digit(text[end + 1]);
        const bool apostrophe_inner =
            c == '\'' && end > pos && utf8::is_alpha(text[end - 1]) &&
            end + 1 < chunk_end && utf8::is_alpha(text[end + 1]) &&
            !possessive_at(end, chunk_end);
        if (digit_inner || apostrophe_inner) {
          ++end;
          continue;
        }
        break;
      }
      emit(pos, end);
      pos = end;
    }
    i = chunk_end;
  }
  return tokens;
}

Document make_document(std::string id, std::string title, std::string raw,
                       const Lexicon &lexicon,
                       const NormalizeOptions &options) {
  Document doc;
  doc.id = std::move(id);
  doc.title = std::move(title);
  doc.raw_text = std::move(raw);
  doc.normalized_text = normalize(doc.raw_text, lexicon, options).text;
  doc.paragraphs = paragraphs(doc.normalized_text);

  const std::u32string text = utf8::decode(doc.normalized_text);
  std::size_t paragraph = 0;
  for (const Span &span : segment(doc.normalized_text, lexicon)) {
    while (paragraph + 1 < doc.paragraphs.size() &&
           doc.paragraphs[paragraph].end <= span.start) {
      ++paragraph;
    }
    Sentence sentence;
    sentence.text = span_text(text, span);
    sentence.span = span;
    sentence.index = doc.sentences.size();
    sentence.paragraph = paragraph;
    sentence.tokens = tokenize(sentence.text, lexicon);
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

}  // namespace synqa
