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

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "synqa/errors.h"
#include "synqa/templates.h"
#include "test_util.h"

namespace synqa {
namespace {

using testing::tagged_sentence;

TemplateSet default_set() {
  return parse_template_file(
      read_file(testing::shipped_data() / "templates" / "default.tpl"));
}

struct Analyzed {
  Sentence sentence;
  std::vector<Fact> facts;
};

Analyzed analyze_text(const std::string &text, const std::string &people = "") {
  std::vector<Gazetteer> gazetteers{parse_gazetteer(EntityLabel::PERSON, people)};
  GazetteerIndex index(gazetteers, Lexicon::shared());
  Analyzed a{tagged_sentence(text), {}};
  a.facts = analyze(a.sentence, index).facts;
  return a;
}

std::vector<std::string> match_ids(const std::vector<TemplateMatch> &matches) {
  std::vector<std::string> ids;
  for (const TemplateMatch &m : matches) ids.push_back(m.tmpl->id);
  return ids;
}

TEST(TemplateParse, WhoTemplate) {
  TemplateSet set = parse_template_file(
      "who1 | WHO | Who [verb] [object]? | subject:PERSON | answer=subject\n");
  ASSERT_EQ(set.templates.size(), 1u);
  const QuestionTemplate &t = set.templates[0];
  EXPECT_EQ(t.id, "who1");
  EXPECT_EQ(t.wh, WhType::WHO);
  EXPECT_EQ(t.complexity(), 2u);
  EXPECT_EQ(t.pattern_slots(), (std::vector<SlotKind>{SlotKind::Verb, SlotKind::Object}));
  ASSERT_EQ(t.constraints.size(), 1u);
  EXPECT_EQ(t.constraints[0].slot, SlotKind::Subject);
  EXPECT_EQ(std::get<EntityLabel>(t.constraints[0].requirement), EntityLabel::PERSON);
  EXPECT_EQ(t.answer, SlotKind::Subject);
  EXPECT_FALSE(t.uses_do_support());
  EXPECT_EQ(t.pattern_text(), "Who [verb] [object]?");
}

TEST(TemplateParse, EmptyFile) {
  EXPECT_TRUE(parse_template_file("").templates.empty());
  EXPECT_TRUE(parse_template_file("# only a comment\n\n").templates.empty());
}

TEST(TemplateParse, BadLineReportsLineNumber) {
  try {
    parse_template_file("bad line without pipes");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_template_file("# header\n\nx | WHO | Who [verb]? | | answer=nowhere\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(TemplateParse, Rejections) {
  const char *bad[] = {
      "a | WHO | Who [verb] [object]? | | answer=subject\n"
      "a | WHO | Who [verb] [object]? | | answer=subject\n",   // duplicate id
      "a | WHO | Who [adverb]? | | answer=subject\n",          // unknown slot
      "a | WHO | Who [verb]? | subject:ALIEN | answer=subject\n",  // unknown label
      "a | WHICH | Who [verb]? | | answer=subject\n",          // unknown WH
      "a | WHO | Who verbs? | | answer=subject\n",             // no slot
      "a | WHO | Who [verb] | | answer=subject\n",             // no question mark
      "a | WHO | Who [verb]? | | answer=verb\n",               // answer not a phrase
      "a | WHO | Who [verb]? | answer=subject\n",              // four fields
  };
  for (const char *content : bad) {
    EXPECT_THROW(parse_template_file(content), ParseError) << content;
  }
}

TEST(TemplateParse, RoundTrip) {
  TemplateSet set = default_set();
  TemplateSet again = parse_template_file(serialize_templates(set));
  EXPECT_EQ(again.templates, set.templates);
}

TEST(TemplateParse, ClassicPatternsVerbatim) {
  TemplateSet set = default_set();
  ASSERT_NE(set.find("paper.who"), nullptr);
  EXPECT_EQ(set.find("paper.who")->pattern_text(), "Who [verb] [object]?");
  EXPECT_EQ(set.find("paper.what")->pattern_text(), "What [verb] [subject]?");
  EXPECT_EQ(set.find("paper.when")->pattern_text(), "When did [subject] [verb]?");
  EXPECT_EQ(set.find("paper.where")->pattern_text(), "Where is [object]?");
  EXPECT_TRUE(set.find("paper.when")->uses_do_support());
  EXPECT_EQ(set.find("missing"), nullptr);
}

TEST(TemplateParse, DigestTracksContent) {
  TemplateSet a = parse_template_file("a | WHO | Who [verb]? | | answer=subject\n");
  TemplateSet b = parse_template_file("b | WHO | Who [verb]? | | answer=subject\n");
  EXPECT_EQ(a.source_digest.size(), 16u);
  EXPECT_NE(a.source_digest, b.source_digest);
}

TEST(TemplateCheck, ConstraintOnAbsentSlot) {
  TemplateSet set =
      parse_template_file("x | WHO | Who [verb]? | object:PERSON | answer=subject\n");
  EXPECT_THROW(check_template_set(set), ConfigError);
  EXPECT_NO_THROW(check_template_set(default_set()));
}

TEST(TemplateMatch, MarieCurieAgainstDefaults) {
  Analyzed a = analyze_text("Marie Curie discovered radium in 1898.", "Marie Curie\n");
  ASSERT_EQ(a.facts.size(), 1u);
  TemplateSet set = default_set();
  std::vector<std::string> ids = match_ids(match(a.facts[0], a.sentence, set));
  auto has = [&](const std::string &id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  EXPECT_TRUE(has("who1"));
  EXPECT_TRUE(has("when1"));
  EXPECT_FALSE(has("where1"));
  EXPECT_FALSE(has("whom1"));
  EXPECT_EQ(ids, (std::vector<std::string>{"paper.who", "paper.what", "paper.when",
                                           "who1", "what1", "when1"}));
}

TEST(TemplateMatch, EmptySet) {
  Analyzed a = analyze_text("Marie Curie discovered radium in 1898.", "Marie Curie\n");
  EXPECT_TRUE(match(a.facts.at(0), a.sentence, TemplateSet{}).empty());
}

TEST(TemplateMatch, MiscSubjectFailsPersonConstraint) {
  // Without a gazetteer the name is a capitalization-run MISC entity.
  Analyzed a = analyze_text("Marie Curie discovered radium in 1898.");
  ASSERT_EQ(a.facts.size(), 1u);
  ASSERT_TRUE(a.facts[0].subject_entity.has_value());
  EXPECT_EQ(a.facts[0].subject_entity->label, EntityLabel::MISC);
  std::vector<std::string> ids = match_ids(match(a.facts[0], a.sentence, default_set()));
  EXPECT_EQ(std::find(ids.begin(), ids.end(), "who1"), ids.end());
}

TEST(TemplateMatch, BindingsCarrySpans) {
  Analyzed a = analyze_text("Marie Curie discovered radium in 1898.", "Marie Curie\n");
  const Fact &f = a.facts.at(0);
  std::optional<BoundSlot> subject = bind_slot(f, a.sentence, SlotKind::Subject);
  ASSERT_TRUE(subject);
  EXPECT_EQ(subject->text, "Marie Curie");
  EXPECT_EQ(subject->span, (Span{0, 11}));
  EXPECT_FALSE(subject->lower_initial);
  std::optional<BoundSlot> time = bind_slot(f, a.sentence, SlotKind::Time);
  ASSERT_TRUE(time);
  EXPECT_EQ(time->text, "1898");
  EXPECT_EQ(time->span, (Span{33, 37}));
  EXPECT_EQ(bind_slot(f, a.sentence, SlotKind::VerbLemma)->text, "discover");
  EXPECT_FALSE(bind_slot(f, a.sentence, SlotKind::Place));
}

TEST(TemplateInstantiate, Examples) {
  Analyzed a = analyze_text("Marie Curie discovered radium in 1898.", "Marie Curie\n");
  TemplateSet set = default_set();
  std::map<std::string, std::string> questions;
  for (const TemplateMatch &m : match(a.facts.at(0), a.sentence, set)) {
    questions[m.tmpl->id] = instantiate(*m.tmpl, m.binding);
  }
  EXPECT_EQ(questions["who1"], "Who discovered radium?");
  EXPECT_EQ(questions["when1"], "When did Marie Curie discover radium?");
  EXPECT_EQ(questions["paper.when"], "When did Marie Curie discover?");
  EXPECT_EQ(questions["what1"], "What did Marie Curie discover?");
}

TEST(TemplateInstantiate, HandBuiltBinding) {
  TemplateSet set = default_set();
  Binding binding;
  binding[SlotKind::Verb] = BoundSlot{.text = "discovered"};
  binding[SlotKind::Object] = BoundSlot{.text = "radium"};
  EXPECT_EQ(instantiate(*set.find("who1"), binding), "Who discovered radium?");
}

TEST(TemplateInstantiate, LowercasesSentenceInitialCommonNoun) {
  Analyzed a = analyze_text("The committee met in Geneva.");
  ASSERT_EQ(a.facts.size(), 1u);
  TemplateSet set = parse_template_file(
      "w | WHERE | Where did [subject] [verb-lemma]? | | answer=place\n");
  std::vector<TemplateMatch> matches = match(a.facts[0], a.sentence, set);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(instantiate(*matches[0].tmpl, matches[0].binding),
            "Where did the committee meet?");
}

TEST(TemplateInstantiate, EmptyOrMissingSlotThrows) {
  TemplateSet set = parse_template_file("x | WHAT | What about [object]? | | answer=object\n");
  Binding empty;
  empty[SlotKind::Object] = BoundSlot{.text = ""};
  EXPECT_THROW(instantiate(set.templates[0], empty), std::invalid_argument);
  EXPECT_THROW(instantiate(set.templates[0], Binding{}), std::invalid_argument);
}

}  // namespace
}  // namespace synqa
