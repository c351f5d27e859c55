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

// Question templates: the line-based DSL, slot binding against facts and
// surface realization.
//
//   id | WH | pattern | constraints | answer=slot
//
// e.g. "who1 | WHO | Who [verb] [object]? | subject:PERSON | answer=subject".

#ifndef SYNQA_TEMPLATES_H_
#define SYNQA_TEMPLATES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "synqa/analysis.h"
#include "synqa/text_types.h"

namespace synqa {

enum class WhType { WHO, WHAT, WHEN, WHERE, WHY, HOW };
std::string_view wh_name(WhType wh);
std::optional<WhType> parse_wh(std::string_view name);

enum class SlotKind { Subject, Object, Verb, VerbLemma, Time, Place };
std::string_view slot_name(SlotKind slot);
std::optional<SlotKind> parse_slot(std::string_view name);

struct Literal {
  std::string text;
  bool operator==(const Literal &) const = default;
};
using PatternElement = std::variant<Literal, SlotKind>;

struct Constraint {
  SlotKind slot = SlotKind::Subject;
  std::variant<EntityLabel, Pos> requirement;
  bool operator==(const Constraint &) const = default;
};

struct QuestionTemplate {
  std::string id;
  WhType wh = WhType::WHAT;
  std::vector<PatternElement> pattern;
  std::vector<Constraint> constraints;
  SlotKind answer = SlotKind::Subject;

  // Number of slots in the pattern.
  std::size_t complexity() const;
  std::vector<SlotKind> pattern_slots() const;
  // "When did [subject] [verb]?" style patterns render [verb] as its lemma.
  bool uses_do_support() const;
  // Pattern text as written in the DSL.
  std::string pattern_text() const;

  bool operator==(const QuestionTemplate &) const = default;
};

struct TemplateSet {
  std::vector<QuestionTemplate> templates;
  std::string source_digest;  // FNV-1a 64 of the DSL text, hex

  const QuestionTemplate *find(std::string_view id) const;
};

// Throws ParseError (with line number) on malformed lines, duplicate ids
// and unknown slots, labels or question types.
TemplateSet parse_template_file(std::string_view content);

std::string serialize_templates(const TemplateSet &set);

// Rejects templates whose constraints name a slot that is neither in the
// pattern nor the answer. Throws ConfigError.
void check_template_set(const TemplateSet &set);

struct BoundSlot {
  std::string text;   // verbatim surface (the lemma for [verb-lemma])
  Span span;          // document-relative
  std::optional<Entity> entity;
  Pos head_pos = Pos::X;
  std::string lemma;  // verb lemma, for do-support
  // First word of the sentence, not a proper noun or abbreviation:
  // lower-cased when it lands inside a question.
  bool lower_initial = false;
};

using Binding = std::map<SlotKind, BoundSlot>;

// Binds a fact component to a slot kind, if the fact has it.
std::optional<BoundSlot> bind_slot(const Fact &fact, const Sentence &sentence,
                                   SlotKind slot);

struct TemplateMatch {
  const QuestionTemplate *tmpl = nullptr;
  Binding binding;
};

// Every template whose pattern and answer slots are fillable from the fact
// and whose constraints hold, in file order.
std::vector<TemplateMatch> match(const Fact &fact, const Sentence &sentence,
                                 const TemplateSet &set);

// Joins literals and bound texts with single spaces (none before "?" or
// ","), upper-cases the first character. Throws std::invalid_argument when
// a pattern slot is unbound or bound to empty text.
std::string instantiate(const QuestionTemplate &tmpl, const Binding &binding);

}  // namespace synqa

#endif  // SYNQA_TEMPLATES_H_
