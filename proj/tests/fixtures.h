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

// Fixture checks shared by golden_test and the acceptance binary.
//
// tests/data/facts/annotations.jsonl holds one hand-annotated sentence per
// line. Each fact names its subject, verb, object and adjunct phrases by
// surface text; the expected span is the first occurrence of that text in
// the sentence.

#ifndef SYNQA_TESTS_FIXTURES_H_
#define SYNQA_TESTS_FIXTURES_H_

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "synqa/analysis.h"
#include "synqa/corpus.h"
#include "synqa/generation.h"
#include "synqa/lexicon.h"
#include "synqa/preprocess.h"
#include "synqa/templates.h"
#include "synqa/utf8.h"

namespace synqa::fixtures {

inline std::filesystem::path test_data() { return SYNQA_TEST_DATA_DIR; }
inline std::filesystem::path shipped_data() { return SYNQA_SHIPPED_DATA_DIR; }

inline std::filesystem::path golden_dir() { return test_data() / "golden"; }

inline TemplateSet default_templates() {
  return parse_template_file(read_file(shipped_data() / "templates" / "default.tpl"));
}

struct GoldenInputs {
  std::vector<RawDocument> corpus;
  std::vector<Gazetteer> gazetteers;
  TemplateSet templates;
};

inline GoldenInputs golden_inputs() {
  GoldenInputs in;
  in.corpus = parse_corpus(read_file(golden_dir() / "corpus.txt"));
  in.gazetteers = load_gazetteers(golden_dir() / "gazetteers");
  in.templates = default_templates();
  return in;
}

inline std::string golden_expected() {
  return read_file(golden_dir() / "expected.json");
}

// Code-point span of the first occurrence of `needle` in `text`.
inline std::optional<Span> find_span(const std::string &text,
                                     const std::string &needle) {
  std::size_t at = text.find(needle);
  if (at == std::string::npos) return std::nullopt;
  std::size_t start = utf8::length(std::string_view(text).substr(0, at));
  return Span{start, start + utf8::length(needle)};
}

inline std::string show(Span s) {
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + ")";
}

inline std::string show(const std::optional<Entity> &e) {
  return e ? std::string(label_name(e->label)) : std::string("none");
}

// Runs the analysis on every annotated sentence and lists each difference.
inline std::vector<std::string> check_fact_annotations(std::size_t *sentences = nullptr) {
  using nlohmann::json;
  const Lexicon &lexicon = Lexicon::shared();
  std::vector<Gazetteer> gazetteers =
      load_gazetteers(test_data() / "facts" / "gazetteers");
  GazetteerIndex index(gazetteers, lexicon);

  std::vector<std::string> mismatches;
  std::istringstream lines(read_file(test_data() / "facts" / "annotations.jsonl"));
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++count;
    json row = json::parse(line);
    const std::string text = row["text"];
    Sentence sentence;
    sentence.text = text;
    sentence.span = Span{0, utf8::length(text)};
    sentence.tokens = tokenize(text, lexicon);
    tag_pos(sentence.tokens, lexicon);
    std::vector<Fact> facts = analyze(sentence, index).facts;

    auto report = [&](const std::string &what) {
      mismatches.push_back("\"" + text + "\": " + what);
    };
    const json &expected = row["facts"];
    if (facts.size() != expected.size()) {
      report("expected " + std::to_string(expected.size()) + " facts, got " +
             std::to_string(facts.size()));
      continue;
    }
    for (std::size_t i = 0; i < facts.size(); ++i) {
      const Fact &f = facts[i];
      const json &e = expected[i];
      auto check_span = [&](const std::string &what, Span got, const json &surface) {
        std::optional<Span> want = find_span(text, surface.get<std::string>());
        if (!want || *want != got) {
          report(what + " expected '" + surface.get<std::string>() + "' got '" +
                 span_text(text, got) + "' " + show(got));
        }
      };
      auto check_label = [&](const std::string &what, const std::optional<Entity> &got,
                             const json &label) {
        std::string want = label.is_null() ? "none" : label.get<std::string>();
        if (show(got) != want) report(what + " label expected " + want + " got " + show(got));
      };
      check_span("subject", token_span(sentence, f.subject.tokens), e["subject"]);
      check_label("subject", f.subject_entity, e["subject_label"]);
      check_span("verb", sentence.tokens[f.verb].span, e["verb"]);
      if (f.verb_lemma != e["lemma"].get<std::string>()) {
        report("lemma expected " + e["lemma"].get<std::string>() + " got " + f.verb_lemma);
      }
      if (e["object"].is_null() != !f.object.has_value()) {
        report(std::string("object ") + (f.object ? "unexpected" : "missing"));
      } else if (f.object) {
        check_span("object", token_span(sentence, f.object->tokens), e["object"]);
        check_label("object", f.object_entity, e["object_label"]);
      }
      const json &adjuncts = e["adjuncts"];
      if (adjuncts.size() != f.adjuncts.size()) {
        report("expected " + std::to_string(adjuncts.size()) + " adjuncts, got " +
               std::to_string(f.adjuncts.size()));
        continue;
      }
      for (std::size_t k = 0; k < adjuncts.size(); ++k) {
        check_span("adjunct", token_span(sentence, f.adjuncts[k].chunk.tokens),
                   adjuncts[k]["text"]);
        std::string kind(adjunct_name(f.adjuncts[k].kind));
        if (kind != adjuncts[k]["kind"].get<std::string>()) {
          report("adjunct kind expected " + adjuncts[k]["kind"].get<std::string>() +
                 " got " + kind);
        }
      }
    }
  }
  if (sentences) *sentences = count;
  return mismatches;
}

}  // namespace synqa::fixtures

#endif  // SYNQA_TESTS_FIXTURES_H_
