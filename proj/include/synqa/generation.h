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

// Per-document QA pair production: suitability gate, analysis, template
// matching, scoring, dedupe, per-sentence cap and score threshold.

#ifndef SYNQA_GENERATION_H_
#define SYNQA_GENERATION_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "synqa/analysis.h"
#include "synqa/corpus.h"
#include "synqa/dataset.h"
#include "synqa/lexicon.h"
#include "synqa/templates.h"
#include "synqa/text_types.h"

namespace synqa {

// Version tag of the scoring formula, echoed with the run configuration.
inline constexpr std::string_view kScoreFormula = "synqa-score-v1";

// Answer provenance: the detector behind the answer slot's entity.
enum class AnswerSource { GAZETTEER, REGEX, CAPITALIZATION, NONE };
std::string_view answer_source_name(AnswerSource source);

struct Provenance {
  AnswerSource source = AnswerSource::NONE;
  Span sentence;  // sentence span in the normalized document
};

struct QAPair {
  std::string id;  // {doc}-s{sentence}-{template}-{k}
  std::string question;
  std::string answer_text;
  std::size_t answer_start = 0;  // code points into context
  std::string context;           // the paragraph holding the sentence
  std::string template_id;
  WhType wh = WhType::WHAT;
  double score = 0.0;
  Provenance provenance;

  // Sort and grouping keys.
  std::string document_id;
  std::size_t sentence_index = 0;
  std::size_t template_rank = 0;
  std::size_t fact_index = 0;
};

struct GenerationConfig {
  double min_score = 0.5;
  std::size_t max_pairs_per_sentence = 4;
  std::uint64_t seed = 42;  // recorded; generation itself draws no numbers
  bool lowercase = false;

  // Throws ConfigError naming the first out-of-range field.
  void validate() const;
};

// Cap value that disables the per-sentence limit.
inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

struct GenerationStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t facts = 0;
  std::size_t candidates = 0;  // instantiated before dedupe/cap/filter
  std::size_t emitted = 0;
  std::size_t filtered = 0;    // dropped by min_score

  GenerationStats &operator+=(const GenerationStats &other);
};

struct ScoreInputs {
  bool span_valid = true;
  bool pronoun_bound = false;
  std::optional<double> answer_confidence;  // entity backing the answer
  std::size_t question_tokens = 0;
};

// g_span * g_pron * (0.6 * s_conf + 0.4 * s_len), rounded to 1e-6.
double score(const ScoreInputs &inputs);

// s_len: 1 inside [4, 20] question tokens, minus 0.1 per token outside.
double length_score(std::size_t question_tokens);

// Score of a built pair given the binding it came from.
double score(const QAPair &pair, const Binding &binding, const Lexicon &lexicon);

// Sentences outside [4, 60] tokens, or whose main verb has a bare pronoun
// as subject, are skipped. Expects tagged tokens.
bool is_suitable(const Sentence &sentence);

std::vector<QAPair> generate_pairs(const Document &document,
                                   const TemplateSet &templates,
                                   const GazetteerIndex &gazetteers,
                                   const GenerationConfig &config,
                                   const Lexicon &lexicon = Lexicon::shared(),
                                   GenerationStats *stats = nullptr);

// Keeps pairs with score >= min_score, in order.
std::vector<QAPair> filter(std::vector<QAPair> pairs, double min_score);

// Collapses pairs with equal (question, answer_text, context) to the
// highest-scoring one (tie: smaller id). Order is otherwise preserved.
std::vector<QAPair> dedupe(std::vector<QAPair> pairs);

// Keeps at most `cap` pairs per sentence, highest score first (tie:
// template order, then fact index). Order is otherwise preserved.
std::vector<QAPair> cap_per_sentence(std::vector<QAPair> pairs, std::size_t cap);

struct CorpusResult {
  QADataset dataset;
  GenerationStats stats;
};

// Runs the whole corpus, `workers` documents at a time. The output does not
// depend on the worker count.
CorpusResult generate_corpus(std::span<const RawDocument> corpus,
                             const TemplateSet &templates,
                             const GazetteerIndex &gazetteers,
                             const GenerationConfig &config,
                             const Lexicon &lexicon = Lexicon::shared(),
                             std::size_t workers = 1);

// Synthetic dataset: one article per document with pairs, one paragraph
// per distinct context.
QADataset to_dataset(std::span<const std::vector<QAPair>> per_document,
                     std::span<const std::string> titles);

}  // namespace synqa

#endif  // SYNQA_GENERATION_H_
