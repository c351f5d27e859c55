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

// Text cleanup, sentence segmentation and tokenization.

#ifndef SYNQA_PREPROCESS_H_
#define SYNQA_PREPROCESS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "synqa/lexicon.h"
#include "synqa/text_types.h"

namespace synqa {

struct NormalizationReport {
  std::size_t contractions_expanded = 0;
  std::size_t quotes_normalized = 0;
  std::size_t whitespace_collapsed = 0;
};

struct NormalizeOptions {
  bool lowercase = false;
};

struct Normalized {
  std::string text;
  NormalizationReport report;
};

// Folds curly quotes, expands contractions and collapses whitespace. A
// whitespace run holding two or more newlines becomes a paragraph break
// ("\n\n"); any other run becomes a single space. Leading and trailing
// whitespace is dropped. Case is preserved unless options.lowercase is set.
Normalized normalize(std::string_view raw, const Lexicon &lexicon,
                     const NormalizeOptions &options = {});

// Sentence spans over normalized text, in order, excluding surrounding
// whitespace.
std::vector<Span> segment(std::string_view normalized, const Lexicon &lexicon);

// Paragraph spans: text separated by whitespace runs containing at least
// two newlines.
std::vector<Span> paragraphs(std::string_view normalized);

// Splits a sentence into tokens with sentence-relative spans. POS tags are
// left unset (X).
std::vector<Token> tokenize(std::string_view sentence_text,
                            const Lexicon &lexicon);

// Characters split off as their own tokens.
bool is_split_punct(char32_t ch);

// Normalizes, segments and tokenizes one document.
Document make_document(std::string id, std::string title, std::string raw,
                       const Lexicon &lexicon,
                       const NormalizeOptions &options = {});

}  // namespace synqa

#endif  // SYNQA_PREPROCESS_H_
