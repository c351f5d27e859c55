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

// Immutable text model shared by every stage of the pipeline. Spans count
// Unicode code points; token spans are relative to their sentence and
// sentence spans are relative to the document's normalized text.

#ifndef SYNQA_TEXT_TYPES_H_
#define SYNQA_TEXT_TYPES_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace synqa {

// Half-open interval [start, end) of code points.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  auto operator<=>(const Span &) const = default;
};

// Returns the code-point substring of `text` covered by `span`. Throws
// std::out_of_range when the span is invalid for `text`.
std::string span_text(std::string_view text, Span span);
std::string span_text(std::u32string_view text, Span span);

// Maps a span relative to an inner text onto the outer coordinate system,
// where `outer` is the inner text's position. Throws std::out_of_range when
// the result would exceed outer.end.
Span project_span(Span inner, Span outer);

enum class Pos {
  DET, NOUN, PROPN, VERB, ADJ, ADV, PRON, ADP, NUM, CONJ, PART, PUNCT, X
};

std::string_view pos_name(Pos pos);
std::optional<Pos> parse_pos(std::string_view name);

struct Token {
  std::string text;
  Span span;
  Pos pos = Pos::X;
  std::string lemma;
};

struct Sentence {
  std::string text;
  Span span;
  std::vector<Token> tokens;
  std::size_t index = 0;
  // Ordinal of the paragraph that contains this sentence.
  std::size_t paragraph = 0;
};

struct Document {
  std::string id;
  std::string title;
  std::string raw_text;
  std::string normalized_text;
  // Paragraph spans over normalized_text, in order.
  std::vector<Span> paragraphs;
  std::vector<Sentence> sentences;
};

enum class EntityLabel { PERSON, LOCATION, ORG, DATE, TIME, NUMBER, MISC };
enum class EntitySource { GAZETTEER, REGEX, CAPITALIZATION };

std::string_view label_name(EntityLabel label);
std::optional<EntityLabel> parse_label(std::string_view name);
std::string_view source_name(EntitySource source);

// Fixed confidence attached to each detector.
double source_confidence(EntitySource source);

// Inclusive token index range within a sentence.
struct TokenRange {
  std::size_t first = 0;
  std::size_t last = 0;

  bool contains(std::size_t i) const { return i >= first && i <= last; }
  bool contains(const TokenRange &other) const {
    return other.first >= first && other.last <= last;
  }
  bool overlaps(const TokenRange &other) const {
    return first <= other.last && other.first <= last;
  }
  std::size_t size() const { return last - first + 1; }
  auto operator<=>(const TokenRange &) const = default;
};

struct Entity {
  EntityLabel label = EntityLabel::MISC;
  TokenRange tokens;
  EntitySource source = EntitySource::CAPITALIZATION;
  double confidence = 0.0;

  bool operator==(const Entity &) const = default;
};

Entity make_entity(EntityLabel label, TokenRange tokens, EntitySource source);

// Sentence-relative code-point span covered by a token range.
Span token_span(const Sentence &sentence, TokenRange range);

// Text covered by a token range, including inner whitespace.
std::string range_text(const Sentence &sentence, TokenRange range);

}  // namespace synqa

#endif  // SYNQA_TEXT_TYPES_H_
