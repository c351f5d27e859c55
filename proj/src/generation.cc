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

#include "synqa/generation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "synqa/errors.h"
#include "synqa/preprocess.h"
#include "synqa/utf8.h"

namespace synqa {

namespace {

double round6(double x) { return std::round(x * 1e6) / 1e6; }

bool span_holds(const QAPair &pair) {
  const std::size_t length = utf8::length(pair.answer_text);
  if (length == 0) return false;
  try {
    return span_text(pair.context,
                     Span{pair.answer_start, pair.answer_start + length}) ==
           pair.answer_text;
  } catch (const std::out_of_range &) {
    return false;
  }
}

AnswerSource to_answer_source(const std::optional<Entity> &entity) {
  if (!entity) return AnswerSource::NONE;
  switch (entity->source) {
    case EntitySource::GAZETTEER: return AnswerSource::GAZETTEER;
    case EntitySource::REGEX: return AnswerSource::REGEX;
    case EntitySource::CAPITALIZATION: return AnswerSource::CAPITALIZATION;
  }
  return AnswerSource::NONE;
}

double source_score(AnswerSource source) {
  switch (source) {
    case AnswerSource::GAZETTEER: return source_confidence(EntitySource::GAZETTEER);
    case AnswerSource::REGEX: return source_confidence(EntitySource::REGEX);
    case AnswerSource::CAPITALIZATION:
      return source_confidence(EntitySource::CAPITALIZATION);
    case AnswerSource::NONE: break;
  }
  return 0.5;
}

bool outranks(const QAPair &a, const QAPair &b) {
  if (a.score != b.score) return a.score > b.score;
  return std::tie(a.template_rank, a.fact_index) <
         std::tie(b.template_rank, b.fact_index);
}

}  // namespace

std::string_view answer_source_name(AnswerSource source) {
  switch (source) {
    case AnswerSource::GAZETTEER: return "GAZETTEER";
    case AnswerSource::REGEX: return "REGEX";
    case AnswerSource::CAPITALIZATION: return "CAPITALIZATION";
    case AnswerSource::NONE: break;
  }
  return "NONE";
}

void GenerationConfig::validate() const {
  if (!(min_score >= 0.0 && min_score <= 1.0)) {
    throw ConfigError("min_score", "must lie in [0, 1]");
  }
  if (max_pairs_per_sentence < 1) {
    throw ConfigError("max_pairs_per_sentence", "must be at least 1");
  }
}

GenerationStats &GenerationStats::operator+=(const GenerationStats &other) {
  documents += other.documents;
  sentences += other.sentences;
  facts += other.facts;
  candidates += other.candidates;
  emitted += other.emitted;
  filtered += other.filtered;
  return *this;
}

double length_score(std::size_t question_tokens) {
  std::size_t distance = 0;
  if (question_tokens < 4) distance = 4 - question_tokens;
  if (question_tokens > 20) distance = question_tokens - 20;
  return std::max(0.0, 1.0 - 0.1 * static_cast<double>(distance));
}

double score(const ScoreInputs &inputs) {
  if (!inputs.span_valid || inputs.pronoun_bound) return 0.0;
  const double s_conf = inputs.answer_confidence.value_or(0.5);
  const double s_len = length_score(inputs.question_tokens);
  return round6(0.6 * s_conf + 0.4 * s_len);
}

double score(const QAPair &pair, const Binding &binding, const Lexicon &lexicon) {
  ScoreInputs inputs;
  inputs.span_valid = span_holds(pair);
  for (const auto &[slot, bound] : binding) {
    if (slot == SlotKind::Verb || slot == SlotKind::VerbLemma) continue;
    if (bound.head_pos == Pos::PRON || lexicon.is_pronoun(bound.text)) {
      inputs.pronoun_bound = true;
    }
  }
  if (pair.provenance.source != AnswerSource::NONE) {
    inputs.answer_confidence = source_score(pair.provenance.source);
  }
  inputs.question_tokens = tokenize(pair.question, lexicon).size();
  return score(inputs);
}

bool is_suitable(const Sentence &sentence) {
  const std::size_t n = sentence.tokens.size();
  if (n < 4 || n > 60) return false;
  std::vector<Chunk> chunks = chunk_phrases(sentence);
  std::optional<std::size_t> verb = find_main_verb(sentence, chunks);
  if (!verb) return true;
  for (std::size_t i = *verb; i-- > 0;) {
    const Pos pos = sentence.tokens[i].pos;
    if (pos == Pos::ADV || pos == Pos::PART || pos == Pos::VERB) continue;
    return pos != Pos::PRON;
  }
  return true;
}

std::vector<QAPair> filter(std::vector<QAPair> pairs, double min_score) {
  std::erase_if(pairs, [&](const QAPair &p) { return !(p.score >= min_score); });
  return pairs;
}

std::vector<QAPair> dedupe(std::vector<QAPair> pairs) {
  std::map<std::tuple<std::string_view, std::string_view, std::string_view>,
           std::size_t>
      best;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const QAPair &p = pairs[i];
    auto [it, inserted] =
        best.try_emplace({p.question, p.answer_text, p.context}, i);
    if (inserted) continue;
    const QAPair &q = pairs[it->second];
    if (p.score > q.score || (p.score == q.score && p.id < q.id)) it->second = i;
  }
  std::vector<bool> keep(pairs.size(), false);
  for (const auto &entry : best) keep[entry.second] = true;
  std::vector<QAPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (keep[i]) out.push_back(std::move(pairs[i]));
  }
  return out;
}

std::vector<QAPair> cap_per_sentence(std::vector<QAPair> pairs, std::size_t cap) {
  std::map<std::pair<std::string, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    groups[{pairs[i].document_id, pairs[i].sentence_index}].push_back(i);
  }
  std::vector<bool> keep(pairs.size(), false);
  for (auto &[key, members] : groups) {
    std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return outranks(pairs[a], pairs[b]);
    });
    for (std::size_t j = 0; j < members.size() && j < cap; ++j) keep[members[j]] = true;
  }
  std::vector<QAPair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (keep[i]) out.push_back(std::move(pairs[i]));
  }
  return out;
}

std::vector<QAPair> generate_pairs(const Document &document,
                                   const TemplateSet &templates,
                                   const GazetteerIndex &gazetteers,
                                   const GenerationConfig &config,
                                   const Lexicon &lexicon,
                                   GenerationStats *stats) {
  config.validate();
  check_template_set(templates);
  GenerationStats local;
  local.documents = 1;

  std::map<std::string_view, std::size_t> rank;
  for (std::size_t i = 0; i < templates.templates.size(); ++i) {
    rank[templates.templates[i].id] = i;
  }

  std::vector<QAPair> candidates;
  std::map<std::size_t, std::string> contexts;
  for (Sentence sentence : document.sentences) {
    ++local.sentences;
    tag_pos(sentence.tokens, lexicon);
    if (!is_suitable(sentence)) continue;
    SentenceAnalysis analysis = analyze(sentence, gazetteers, document.id);
    local.facts += analysis.facts.size();
    if (analysis.facts.empty()) continue;

    const Span paragraph = document.paragraphs.at(sentence.paragraph);
    auto [ctx, fresh] = contexts.try_emplace(sentence.paragraph);
    if (fresh) ctx->second = span_text(document.normalized_text, paragraph);

    for (std::size_t k = 0; k < analysis.facts.size(); ++k) {
      for (const TemplateMatch &m : match(analysis.facts[k], sentence, templates)) {
        const QuestionTemplate &t = *m.tmpl;
        const BoundSlot &answer = m.binding.at(t.answer);
        QAPair pair;
        pair.id = document.id + "-s" + std::to_string(sentence.index) + "-" +
                  t.id + "-" + std::to_string(k);
        pair.question = instantiate(t, m.binding);
        pair.answer_text = answer.text;
        pair.answer_start = answer.span.start - paragraph.start;
        pair.context = ctx->second;
        pair.template_id = t.id;
        pair.wh = t.wh;
        pair.provenance = Provenance{to_answer_source(answer.entity), sentence.span};
        pair.document_id = document.id;
        pair.sentence_index = sentence.index;
        pair.template_rank = rank.at(t.id);
        pair.fact_index = k;
        pair.score = score(pair, m.binding, lexicon);
        candidates.push_back(std::move(pair));
      }
    }
  }
  local.candidates = candidates.size();

  std::vector<QAPair> pairs = cap_per_sentence(dedupe(std::move(candidates)),
                                               config.max_pairs_per_sentence);
  const std::size_t before = pairs.size();
  pairs = filter(std::move(pairs), config.min_score);
  local.filtered = before - pairs.size();
  local.emitted = pairs.size();
  std::stable_sort(pairs.begin(), pairs.end(), [](const QAPair &a, const QAPair &b) {
    return std::tie(a.sentence_index, a.template_rank, a.fact_index) <
           std::tie(b.sentence_index, b.template_rank, b.fact_index);
  });
  if (stats) *stats += local;
  return pairs;
}

CorpusResult generate_corpus(std::span<const RawDocument> corpus,
                             const TemplateSet &templates,
                             const GazetteerIndex &gazetteers,
                             const GenerationConfig &config,
                             const Lexicon &lexicon, std::size_t workers) {
  config.validate();
  check_template_set(templates);
  const std::size_t n = corpus.size();
  std::vector<std::vector<QAPair>> results(n);
  std::vector<GenerationStats> stats(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const NormalizeOptions options{config.lowercase};

  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const RawDocument &raw = corpus[i];
        Document doc = make_document(raw.id, raw.title, raw.text, lexicon, options);
        results[i] = generate_pairs(doc, templates, gazetteers, config, lexicon,
                                    &stats[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread &th : pool) th.join();
  }
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CorpusResult out;
  std::vector<std::string> titles;
  for (std::size_t i = 0; i < n; ++i) {
    out.stats += stats[i];
    titles.push_back(corpus[i].title);
  }
  out.dataset = to_dataset(results, titles);
  return out;
}

QADataset to_dataset(std::span<const std::vector<QAPair>> per_document,
                     std::span<const std::string> titles) {
  if (per_document.size() != titles.size()) {
    throw std::invalid_argument("to_dataset: one title per document required");
  }
  QADataset dataset;
  for (std::size_t d = 0; d < per_document.size(); ++d) {
    if (per_document[d].empty()) continue;
    Article article{titles[d], {}};
    for (const QAPair &pair : per_document[d]) {
      if (article.paragraphs.empty() ||
          article.paragraphs.back().context != pair.context) {
        article.paragraphs.push_back(Paragraph{pair.context, {}});
      }
      QAEntry qa;
      qa.id = pair.id;
      qa.question = pair.question;
      qa.answers.push_back(Answer{pair.answer_text, pair.answer_start});
      qa.meta.origin = Origin::SYNTHETIC;
      qa.meta.template_id = pair.template_id;
      qa.meta.wh_type = pair.wh;
      qa.meta.score = pair.score;
      article.paragraphs.back().qas.push_back(std::move(qa));
    }
    dataset.articles.push_back(std::move(article));
  }
  return dataset;
}

}  // namespace synqa
