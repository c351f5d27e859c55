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

#include "synqa/templates.h"

#include <array>
#include <cstdint>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "synqa/errors.h"
#include "synqa/utf8.h"

namespace synqa {

namespace {

constexpr std::array<std::string_view, 6> kWhNames = {
    "WHO", "WHAT", "WHEN", "WHERE", "WHY", "HOW"};
constexpr std::array<std::string_view, 6> kSlotNames = {
    "subject", "object", "verb", "verb-lemma", "time", "place"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

void add_literal_words(std::string_view text, std::vector<PatternElement> &out) {
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    std::string_view word = text.substr(i, j - i);
    if (!word.empty()) {
      std::string_view tail;
      if (word.size() > 1 && (word.back() == '?' || word.back() == ',')) {
        tail = word.substr(word.size() - 1);
        word.remove_suffix(1);
      }
      out.push_back(Literal{std::string(word)});
      if (!tail.empty()) out.push_back(Literal{std::string(tail)});
    }
    i = j;
  }
}

std::vector<PatternElement> parse_pattern(std::string_view text,
                                          std::size_t line) {
  std::vector<PatternElement> pattern;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find('[', pos);
    add_literal_words(text.substr(pos, open - pos), pattern);
    if (open == std::string_view::npos) break;
    std::size_t close = text.find(']', open);
    if (close == std::string_view::npos) {
      throw ParseError("unterminated slot in pattern", line);
    }
    std::string_view name = text.substr(open + 1, close - open - 1);
    std::optional<SlotKind> slot = parse_slot(name);
    if (!slot) throw ParseError("unknown slot [" + std::string(name) + "]", line);
    pattern.emplace_back(*slot);
    pos = close + 1;
  }
  std::size_t slots = 0;
  std::size_t marks = 0;
  for (const auto &element : pattern) {
    if (std::holds_alternative<SlotKind>(element)) {
      ++slots;
    } else if (std::get<Literal>(element).text.find('?') != std::string::npos) {
      ++marks;
    }
  }
  if (slots == 0) throw ParseError("pattern has no slot", line);
  if (marks != 1 || !std::holds_alternative<Literal>(pattern.back()) ||
      std::get<Literal>(pattern.back()).text != "?") {
    throw ParseError("pattern must end with a single '?'", line);
  }
  return pattern;
}

Constraint parse_constraint(std::string_view text, std::size_t line) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("constraint must be slot:LABEL, got '" +
                         std::string(text) + "'",
                     line);
  }
  std::string_view slot_text = trim(text.substr(0, colon));
  std::string_view label_text = trim(text.substr(colon + 1));
  std::optional<SlotKind> slot = parse_slot(slot_text);
  if (!slot) throw ParseError("unknown slot '" + std::string(slot_text) + "'", line);
  Constraint constraint;
  constraint.slot = *slot;
  if (auto label = parse_label(label_text)) {
    constraint.requirement = *label;
  } else if (auto pos = parse_pos(label_text)) {
    constraint.requirement = *pos;
  } else {
    throw ParseError("unknown label '" + std::string(label_text) + "'", line);
  }
  return constraint;
}

std::string join_pieces(const std::vector<std::string> &pieces) {
  std::string out;
  for (const std::string &piece : pieces) {
    if (!out.empty() && piece != "?" && piece != ",") out.push_back(' ');
    out += piece;
  }
  return out;
}

bool constraint_holds(const Constraint &c, const BoundSlot &bound) {
  if (const auto *label = std::get_if<EntityLabel>(&c.requirement)) {
    return bound.entity && bound.entity->label == *label;
  }
  return bound.head_pos == std::get<Pos>(c.requirement);
}

std::size_t first_word_index(const Sentence &sentence) {
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (sentence.tokens[i].pos != Pos::PUNCT) return i;
  }
  return sentence.tokens.size();
}

BoundSlot bind_range(const Sentence &sentence, TokenRange range,
                     std::optional<Entity> entity) {
  BoundSlot bound;
  bound.text = range_text(sentence, range);
  bound.span = project_span(token_span(sentence, range), sentence.span);
  bound.entity = std::move(entity);
  bound.head_pos = sentence.tokens[range.last].pos;
  const Token &first = sentence.tokens[range.first];
  // Abbreviations ("Dr.") keep their case.
  bound.lower_initial = range.first == first_word_index(sentence) &&
                        first.pos != Pos::PROPN && first.text != "I" &&
                        first.text.back() != '.';
  return bound;
}

}  // namespace

std::string_view wh_name(WhType wh) {
  return kWhNames[static_cast<std::size_t>(wh)];
}

std::optional<WhType> parse_wh(std::string_view name) {
  for (std::size_t i = 0; i < kWhNames.size(); ++i) {
    if (kWhNames[i] == name) return static_cast<WhType>(i);
  }
  return std::nullopt;
}

std::string_view slot_name(SlotKind slot) {
  return kSlotNames[static_cast<std::size_t>(slot)];
}

std::optional<SlotKind> parse_slot(std::string_view name) {
  for (std::size_t i = 0; i < kSlotNames.size(); ++i) {
    if (kSlotNames[i] == name) return static_cast<SlotKind>(i);
  }
  return std::nullopt;
}

std::size_t QuestionTemplate::complexity() const {
  return pattern_slots().size();
}

std::vector<SlotKind> QuestionTemplate::pattern_slots() const {
  std::vector<SlotKind> slots;
  for (const auto &element : pattern) {
    if (const auto *slot = std::get_if<SlotKind>(&element)) slots.push_back(*slot);
  }
  return slots;
}

bool QuestionTemplate::uses_do_support() const {
  if (pattern.size() < 2) return false;
  const auto *wh = std::get_if<Literal>(&pattern[0]);
  const auto *aux = std::get_if<Literal>(&pattern[1]);
  return wh && aux && aux->text == "did";
}

std::string QuestionTemplate::pattern_text() const {
  std::vector<std::string> pieces;
  for (const auto &element : pattern) {
    if (const auto *literal = std::get_if<Literal>(&element)) {
      pieces.push_back(literal->text);
    } else {
      pieces.push_back("[" + std::string(slot_name(std::get<SlotKind>(element))) + "]");
    }
  }
  return join_pieces(pieces);
}

const QuestionTemplate *TemplateSet::find(std::string_view id) const {
  for (const auto &t : templates) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

TemplateSet parse_template_file(std::string_view content) {
  TemplateSet set;
  set.source_digest = fnv1a_hex(content);
  std::set<std::string, std::less<>> ids;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = trim(content.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++line_number;
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields = split(line, '|');
    if (fields.size() != 5) {
      throw ParseError("expected 5 '|'-separated fields", line_number);
    }
    QuestionTemplate t;
    t.id = std::string(fields[0]);
    if (t.id.empty() || t.id.find_first_of(" \t") != std::string::npos) {
      throw ParseError("template id must be a non-empty word", line_number);
    }
    if (ids.count(t.id)) throw ParseError("duplicate template id '" + t.id + "'", line_number);
    std::optional<WhType> wh = parse_wh(fields[1]);
    if (!wh) {
      throw ParseError("unknown question type '" + std::string(fields[1]) + "'",
                       line_number);
    }
    t.wh = *wh;
    t.pattern = parse_pattern(fields[2], line_number);
    if (!fields[3].empty()) {
      for (std::string_view c : split(fields[3], ',')) {
        t.constraints.push_back(parse_constraint(c, line_number));
      }
    }
    std::string_view answer = fields[4];
    if (!answer.starts_with("answer=")) {
      throw ParseError("last field must be answer=slot", line_number);
    }
    std::optional<SlotKind> slot = parse_slot(trim(answer.substr(7)));
    if (!slot || *slot == SlotKind::Verb || *slot == SlotKind::VerbLemma) {
      throw ParseError("answer must name a subject, object, time or place slot",
                       line_number);
    }
    t.answer = *slot;
    ids.insert(t.id);
    set.templates.push_back(std::move(t));
  }
  return set;
}

std::string serialize_templates(const TemplateSet &set) {
  std::string out;
  for (const QuestionTemplate &t : set.templates) {
    out += t.id;
    out += " | ";
    out += wh_name(t.wh);
    out += " | ";
    out += t.pattern_text();
    out += " | ";
    for (std::size_t i = 0; i < t.constraints.size(); ++i) {
      const Constraint &c = t.constraints[i];
      if (i) out += ", ";
      out += slot_name(c.slot);
      out += ':';
      if (const auto *label = std::get_if<EntityLabel>(&c.requirement)) {
        out += label_name(*label);
      } else {
        out += pos_name(std::get<Pos>(c.requirement));
      }
    }
    out += " | answer=";
    out += slot_name(t.answer);
    out += '\n';
  }
  return out;
}

void check_template_set(const TemplateSet &set) {
  for (const QuestionTemplate &t : set.templates) {
    std::vector<SlotKind> slots = t.pattern_slots();
    for (const Constraint &c : t.constraints) {
      bool known = c.slot == t.answer;
      for (SlotKind s : slots) known |= s == c.slot;
      if (!known) {
        throw ConfigError("templates",
                          "template '" + t.id + "' constrains [" +
                              std::string(slot_name(c.slot)) +
                              "] which is neither in its pattern nor its answer");
      }
    }
  }
}

std::optional<BoundSlot> bind_slot(const Fact &fact, const Sentence &sentence,
                                   SlotKind slot) {
  switch (slot) {
    case SlotKind::Subject:
      return bind_range(sentence, fact.subject.tokens, fact.subject_entity);
    case SlotKind::Object:
      if (!fact.object) return std::nullopt;
      return bind_range(sentence, fact.object->tokens, fact.object_entity);
    case SlotKind::Verb:
    case SlotKind::VerbLemma: {
      const Token &verb = sentence.tokens[fact.verb];
      BoundSlot bound;
      bound.text = slot == SlotKind::Verb ? verb.text : verb.lemma;
      bound.span = project_span(verb.span, sentence.span);
      bound.head_pos = verb.pos;
      bound.lemma = verb.lemma;
      return bound;
    }
    case SlotKind::Time:
    case SlotKind::Place: {
      const AdjunctKind wanted =
          slot == SlotKind::Time ? AdjunctKind::TIME : AdjunctKind::PLACE;
      for (const Adjunct &adjunct : fact.adjuncts) {
        if (adjunct.kind != wanted) continue;
        const TokenRange inner{adjunct.chunk.tokens.first + 1,
                               adjunct.chunk.tokens.last};
        return bind_range(sentence, inner, adjunct.entity);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<TemplateMatch> match(const Fact &fact, const Sentence &sentence,
                                 const TemplateSet &set) {
  std::vector<TemplateMatch> matches;
  for (const QuestionTemplate &t : set.templates) {
    std::vector<SlotKind> needed = t.pattern_slots();
    needed.push_back(t.answer);
    Binding binding;
    bool ok = true;
    for (SlotKind slot : needed) {
      if (binding.count(slot)) continue;
      std::optional<BoundSlot> bound = bind_slot(fact, sentence, slot);
      if (!bound) {
        ok = false;
        break;
      }
      binding.emplace(slot, std::move(*bound));
    }
    for (const Constraint &c : t.constraints) {
      if (!ok) break;
      auto it = binding.find(c.slot);
      if (it == binding.end()) {
        std::optional<BoundSlot> bound = bind_slot(fact, sentence, c.slot);
        ok = bound && constraint_holds(c, *bound);
      } else {
        ok = constraint_holds(c, it->second);
      }
    }
    if (ok) matches.push_back(TemplateMatch{&t, std::move(binding)});
  }
  return matches;
}

std::string instantiate(const QuestionTemplate &tmpl, const Binding &binding) {
  const bool do_support = tmpl.uses_do_support();
  std::vector<std::string> pieces;
  for (const auto &element : tmpl.pattern) {
    if (const auto *literal = std::get_if<Literal>(&element)) {
      pieces.push_back(literal->text);
      continue;
    }
    const SlotKind slot = std::get<SlotKind>(element);
    auto it = binding.find(slot);
    if (it == binding.end() || it->second.text.empty()) {
      throw std::invalid_argument("template '" + tmpl.id + "': slot [" +
                                  std::string(slot_name(slot)) +
                                  "] is not bound");
    }
    const BoundSlot &bound = it->second;
    std::string text = (slot == SlotKind::Verb && do_support && !bound.lemma.empty())
                           ? bound.lemma
                           : bound.text;
    if (bound.lower_initial) {
      std::u32string chars = utf8::decode(text);
      chars[0] = utf8::to_lower(chars[0]);
      text = utf8::encode(chars);
    }
    pieces.push_back(std::move(text));
  }
  return utf8::capitalize(join_pieces(pieces));
}

}  // namespace synqa
