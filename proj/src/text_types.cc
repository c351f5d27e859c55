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

#include "synqa/text_types.h"

#include <array>
#include <stdexcept>

#include "synqa/utf8.h"

namespace synqa {

namespace {

constexpr std::array<std::string_view, 13> kPosNames = {
    "DET", "NOUN", "PROPN", "VERB", "ADJ", "ADV", "PRON",
    "ADP", "NUM", "CONJ", "PART", "PUNCT", "X"};

constexpr std::array<std::string_view, 7> kLabelNames = {
    "PERSON", "LOCATION", "ORG", "DATE", "TIME", "NUMBER", "MISC"};

std::string bad_span(Span span, std::size_t length) {
  return "span [" + std::to_string(span.start) + ", " +
         std::to_string(span.end) + ") invalid for text of length " +
         std::to_string(length);
}

}  // namespace

std::string span_text(std::u32string_view text, Span span) {
  if (span.start > span.end || span.end > text.size()) {
    throw std::out_of_range(bad_span(span, text.size()));
  }
  return utf8::encode(text.substr(span.start, span.size()));
}

std::string span_text(std::string_view text, Span span) {
  // Walk the bytes once instead of decoding the whole text.
  std::size_t cp = 0;
  std::size_t begin = std::string_view::npos;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) continue;
    if (cp == span.start) begin = i;
    if (cp == span.end) break;
    ++cp;
  }
  if (cp == span.start && begin == std::string_view::npos) begin = i;
  if (span.start > span.end || cp < span.end ||
      begin == std::string_view::npos) {
    throw std::out_of_range(bad_span(span, utf8::length(text)));
  }
  return std::string(text.substr(begin, i - begin));
}

Span project_span(Span inner, Span outer) {
  if (inner.start > inner.end || outer.start + inner.end > outer.end) {
    throw std::out_of_range("projected span exceeds outer span");
  }
  return Span{outer.start + inner.start, outer.start + inner.end};
}

std::string_view pos_name(Pos pos) {
  return kPosNames[static_cast<std::size_t>(pos)];
}

std::optional<Pos> parse_pos(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

std::string_view label_name(EntityLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<EntityLabel> parse_label(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<EntityLabel>(i);
  }
  return std::nullopt;
}

std::string_view source_name(EntitySource source) {
  switch (source) {
    case EntitySource::GAZETTEER: return "GAZETTEER";
    case EntitySource::REGEX: return "REGEX";
    case EntitySource::CAPITALIZATION: return "CAPITALIZATION";
  }
  return "";
}

double source_confidence(EntitySource source) {
  switch (source) {
    case EntitySource::GAZETTEER: return 1.0;
    case EntitySource::REGEX: return 0.9;
    case EntitySource::CAPITALIZATION: return 0.6;
  }
  return 0.0;
}

Entity make_entity(EntityLabel label, TokenRange tokens, EntitySource source) {
  return Entity{label, tokens, source, source_confidence(source)};
}

Span token_span(const Sentence &sentence, TokenRange range) {
  if (range.first > range.last || range.last >= sentence.tokens.size()) {
    throw std::out_of_range("token range outside sentence");
  }
  return Span{sentence.tokens[range.first].span.start,
              sentence.tokens[range.last].span.end};
}

std::string range_text(const Sentence &sentence, TokenRange range) {
  return span_text(sentence.text, token_span(sentence, range));
}

}  // namespace synqa
