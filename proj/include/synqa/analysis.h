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

// Rule-based linguistic analysis: part-of-speech tagging, entity
// recognition, noun-phrase chunking and shallow subject-verb-object fact
// extraction.

#ifndef SYNQA_ANALYSIS_H_
#define SYNQA_ANALYSIS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synqa/lexicon.h"
#include "synqa/text_types.h"

namespace synqa {

// Tags every token and fills in its lemma. Deterministic and idempotent.
void tag_pos(std::vector<Token> &tokens, const Lexicon &lexicon);

// Lemma for a word already tagged `pos`.
std::string lemmatize(std::string_view word, Pos pos, const Lexicon &lexicon);

// --- Entities ------------------------------------------------------------

struct Gazetteer {
  EntityLabel label = EntityLabel::MISC;
  std::vector<std::string> entries;
};

// Parses one gazetteer file (one surface form per line, '#' comments).
Gazetteer parse_gazetteer(EntityLabel label, std::string_view content);

// Loads every *.txt file in `dir`; the file stem names the label
// (person.txt -> PERSON). Files are read in name order.
std::vector<Gazetteer> load_gazetteers(const std::filesystem::path &dir);

// Surface-form lookup table built from a gazetteer list. When the same
// surface appears under several labels the winner follows
// PERSON > LOCATION > ORG > DATE > TIME > NUMBER > MISC.
class GazetteerIndex {
 public:
  GazetteerIndex() = default;
  GazetteerIndex(std::span<const Gazetteer> gazetteers, const Lexicon &lexicon);

  std::optional<EntityLabel> find(std::string_view surface) const;
  // Longest entry measured in tokens.
  std::size_t max_tokens() const { return max_tokens_; }
  bool empty() const { return labels_.empty(); }

 private:
  std::unordered_map<std::string, EntityLabel> labels_;
  std::size_t max_tokens_ = 0;
};

// Gazetteer, regex and capitalization detectors in priority order; longest
// match wins and entities never overlap. Sorted by first token.
std::vector<Entity> recognize_entities(const Sentence &sentence,
                                       const GazetteerIndex &gazetteers);

// --- Chunks and facts ----------------------------------------------------

enum class ChunkKind { NP, PP };

struct Chunk {
  TokenRange tokens;
  ChunkKind kind = ChunkKind::NP;
  bool operator==(const Chunk &) const = default;
};

// NP := DET? ADV* ADJ* (NOUN|PROPN|NUM)+ and PP := ADP NP, greedy left to
// right. A PP is emitted immediately before the NP it contains.
std::vector<Chunk> chunk_phrases(const Sentence &sentence);

// Nominal tokens of an NP that an entity must cover exactly to label it:
// the trailing run of tokens sharing the POS of the NP's last token.
TokenRange head_tokens(const Sentence &sentence, const Chunk &np);

enum class AdjunctKind { TIME, PLACE, OTHER };
std::string_view adjunct_name(AdjunctKind kind);

struct Adjunct {
  AdjunctKind kind = AdjunctKind::OTHER;
  Chunk chunk;                   // the PP
  std::optional<Entity> entity;  // entity that classified it, if any
  bool operator==(const Adjunct &) const = default;
};

struct SentenceRef {
  std::string document_id;
  std::size_t sentence_index = 0;
  bool operator==(const SentenceRef &) const = default;
};

struct Fact {
  SentenceRef sentence;
  Chunk subject;
  std::size_t verb = 0;
  std::string verb_lemma;
  std::optional<Chunk> object;
  std::vector<Adjunct> adjuncts;
  std::optional<Entity> subject_entity;
  std::optional<Entity> object_entity;
  bool operator==(const Fact &) const = default;
};

// Index of the main verb, or nullopt when the sentence has none.
std::optional<std::size_t> find_main_verb(const Sentence &sentence,
                                          std::span<const Chunk> chunks);

std::vector<Fact> extract_facts(const Sentence &sentence,
                                std::span<const Entity> entities,
                                std::span<const Chunk> chunks,
                                std::string_view document_id = {});

struct SentenceAnalysis {
  std::vector<Entity> entities;
  std::vector<Chunk> chunks;
  std::vector<Fact> facts;
};

// Runs entities, chunks and facts over an already tagged sentence.
SentenceAnalysis analyze(const Sentence &sentence,
                         const GazetteerIndex &gazetteers,
                         std::string_view document_id = {});

}  // namespace synqa

#endif  // SYNQA_ANALYSIS_H_
