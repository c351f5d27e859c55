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

#include "synqa/analysis.h"

#include <algorithm>
#include <array>

#include "synqa/preprocess.h"
#include "synqa/utf8.h"

namespace synqa {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}
bool is_consonant(char c) { return c >= 'a' && c <= 'z' && !is_vowel(c); }

bool is_numeric(std::string_view w) {
  // digits with single [.,:] separators between digit groups
  if (w.empty() || !utf8::is_digit(static_cast<unsigned char>(w.front())) ||
      !utf8::is_digit(static_cast<unsigned char>(w.back()))) {
    return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (c >= '0' && c <= '9') continue;
    if ((c == '.' || c == ',' || c == ':') && w[i - 1] >= '0' &&
        w[i - 1] <= '9' && w[i + 1] >= '0' && w[i + 1] <= '9') {
      continue;
    }
    return false;
  }
  return true;
}

bool is_dash_like(char32_t ch) {
  return ch == '-' || ch == 0x2013 || ch == 0x2014 || ch == 0x2026;
}

// PUNCT for punctuation-only tokens, X for other symbol-only tokens,
// nullopt when the token holds a letter or digit.
std::optional<Pos> symbol_class(std::string_view word) {
  bool all_punct = true;
  for (char32_t ch : utf8::decode(word)) {
    if (utf8::is_alnum(ch)) return std::nullopt;
    if (!is_split_punct(ch) && !is_dash_like(ch)) all_punct = false;
  }
  return all_punct ? Pos::PUNCT : Pos::X;
}

std::optional<Pos> suffix_class(std::string_view lower) {
  if (lower.size() > 2 && ends_with(lower, "ly")) return Pos::ADV;
  if (lower.size() > 4 && (ends_with(lower, "ing") || ends_with(lower, "ed"))) {
    return Pos::VERB;
  }
  for (std::string_view s : {"ous", "ful", "able", "ive"}) {
    if (lower.size() > s.size() && ends_with(lower, s)) return Pos::ADJ;
  }
  for (std::string_view s : {"tion", "ness", "ment", "ity"}) {
    if (lower.size() > s.size() && ends_with(lower, s)) return Pos::NOUN;
  }
  return std::nullopt;
}

// Restores a final "e" dropped before -ed/-ing.
bool needs_final_e(const std::string &stem) {
  const std::size_t n = stem.size();
  if (n < 2) return false;
  const char last = stem[n - 1];
  const char prev = stem[n - 2];
  if (last == 'v' || last == 'c') return true;
  if (last == 'z' && (prev == 'i' || prev == 'y')) return true;
  if (last == 'g' && (prev == 'd' || prev == 'r')) return true;
  if (last == 't' && prev == 'a' && n >= 5) {
    const char before = stem[n - 3];
    return is_consonant(before) || before == 'u';
  }
  if (last == 'r' && prev == 'u' && n >= 3) return is_consonant(stem[n - 3]);
  if (last == 's' && prev != 's') {
    if (prev == 'a' || prev == 'o' || prev == 'i' || prev == 'r' ||
        prev == 'n' || prev == 'p' || prev == 'l') {
      return true;
    }
    if (prev == 'u' && n >= 3) return is_vowel(stem[n - 3]);
    return false;
  }
  // Short consonant-vowel-consonant stems: mak(e), vot(e), shap(e).
  const bool cvc = is_consonant(stem[n - 1]) && is_vowel(stem[n - 2]) &&
                   n >= 3 && is_consonant(stem[n - 3]) && last != 'w' &&
                   last != 'x' && last != 'y';
  if (cvc && n == 3) return true;
  if (cvc && n == 4) return is_consonant(stem[0]);
  return false;
}

std::string verb_lemma(const std::string &lower) {
  std::string stem;
  if (lower.size() > 4 && ends_with(lower, "ied")) {
    return lower.substr(0, lower.size() - 3) + "y";
  }
  if (ends_with(lower, "eed")) return lower;
  if (lower.size() > 4 && ends_with(lower, "ing")) {
    stem = lower.substr(0, lower.size() - 3);
  } else if (lower.size() > 4 && ends_with(lower, "ed")) {
    stem = lower.substr(0, lower.size() - 2);
  } else {
    return lower;
  }
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z' &&
      stem[n - 1] != 'f') {
    stem.pop_back();
  } else if (needs_final_e(stem)) {
    stem.push_back('e');
  }
  return stem;
}

std::string noun_lemma(const std::string &lower) {
  if (lower.size() <= 3 || !ends_with(lower, "s") || ends_with(lower, "ss") ||
      ends_with(lower, "us") || ends_with(lower, "is")) {
    return lower;
  }
  if (ends_with(lower, "ies")) return lower.substr(0, lower.size() - 3) + "y";
  for (std::string_view s : {"sses", "shes", "ches", "xes", "zes"}) {
    if (ends_with(lower, s)) return lower.substr(0, lower.size() - 2);
  }
  return lower.substr(0, lower.size() - 1);
}

bool is_nominal(Pos pos) {
  return pos == Pos::NOUN || pos == Pos::PROPN || pos == Pos::NUM;
}

// Returns the last token index of an NP starting at `i`, if one does.
std::optional<std::size_t> match_np(const std::vector<Token> &tokens,
                                    std::size_t i) {
  std::size_t j = i;
  const std::size_t n = tokens.size();
  if (j < n && tokens[j].pos == Pos::DET) ++j;
  while (j < n && tokens[j].pos == Pos::ADV) ++j;
  while (j < n && tokens[j].pos == Pos::ADJ) ++j;
  std::size_t head = j;
  while (j < n && is_nominal(tokens[j].pos)) ++j;
  if (j == head) return std::nullopt;
  return j - 1;
}

constexpr std::array<std::string_view, 5> kTitleCues = {"Dr.", "Mr.", "Mrs.",
                                                        "Ms.", "Prof."};
bool is_title_cue(std::string_view text) {
  return std::find(kTitleCues.begin(), kTitleCues.end(), text) !=
         kTitleCues.end();
}

constexpr std::array<std::string_view, 20> kMonths = {
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
    "Jan.", "Feb.", "Aug.", "Sept.", "Oct.", "Nov.", "Dec.", "Apr."};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

bool is_year(const Token &t) {
  if (t.text.size() != 4 || !all_digits(t.text)) return false;
  int value = std::stoi(t.text);
  return value >= 1000 && value <= 2999;
}

bool is_day(const Token &t) {
  if (t.text.size() > 2 || !all_digits(t.text)) return false;
  int value = std::stoi(t.text);
  return value >= 1 && value <= 31;
}

bool is_clock(const Token &t) {
  const std::string &s = t.text;
  std::size_t colon = s.find(':');
  if (colon == std::string::npos || colon == 0 || colon > 2) return false;
  std::string h = s.substr(0, colon);
  std::string m = s.substr(colon + 1);
  if (!all_digits(h) || m.size() != 2 || !all_digits(m)) return false;
  return std::stoi(h) <= 23 && std::stoi(m) <= 59;
}

bool is_subordinator(std::string_view lower) {
  return lower == "that" || lower == "which" || lower == "who" ||
         lower == "because" || lower == "if" || lower == "when";
}

bool is_auxiliary_lemma(std::string_view lemma) {
  return lemma == "be" || lemma == "have" || lemma == "do";
}

}  // namespace

std::string lemmatize(std::string_view word, Pos pos, const Lexicon &lexicon) {
  std::string lower = utf8::to_lower(word);
  switch (pos) {
    case Pos::VERB:
      if (auto irregular = lexicon.irregular_lemma(lower)) return *irregular;
      return verb_lemma(lower);
    case Pos::NOUN:
      return noun_lemma(lower);
    case Pos::PROPN:
    case Pos::NUM:
    case Pos::PUNCT:
    case Pos::X:
      return std::string(word);
    default:
      return lower;
  }
}

void tag_pos(std::vector<Token> &tokens, const Lexicon &lexicon) {
  bool seen_word = false;
  for (Token &token : tokens) {
    const std::string &w = token.text;
    const std::optional<Pos> symbol = symbol_class(w);
    const bool initial = !seen_word && !symbol;
    if (!symbol) seen_word = true;
    const std::string lower = utf8::to_lower(w);

    std::optional<Pos> pos = lexicon.closed_class(w);
    if (!pos && initial) pos = lexicon.closed_class(lower);
    if (!pos && (lexicon.irregular_lemma(w) ||
                 (initial && lexicon.irregular_lemma(lower)))) {
      pos = Pos::VERB;
    }
    if (!pos) pos = symbol;
    if (!pos && is_numeric(w)) pos = Pos::NUM;
    if (!pos) {
      const char32_t first = utf8::decode(w).front();
      if (utf8::is_upper(first) &&
          (!initial || !lexicon.is_common_word(lower))) {
        pos = Pos::PROPN;
      }
    }
    if (!pos) pos = suffix_class(lower);
    token.pos = pos.value_or(Pos::NOUN);
    token.lemma = lemmatize(w, token.pos, lexicon);
  }
}

// --- Entities ------------------------------------------------------------

Gazetteer parse_gazetteer(EntityLabel label, std::string_view content) {
  Gazetteer gazetteer;
  gazetteer.label = label;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    while (!line.empty() && utf8::is_space(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    while (!line.empty() && utf8::is_space(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    if (!line.empty() && line.front() != '#') {
      gazetteer.entries.emplace_back(line);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return gazetteer;
}

GazetteerIndex::GazetteerIndex(std::span<const Gazetteer> gazetteers,
                               const Lexicon &lexicon) {
  for (const Gazetteer &g : gazetteers) {
    for (const std::string &entry : g.entries) {
      auto [it, inserted] = labels_.emplace(entry, g.label);
      // EntityLabel declaration order is the tie-break priority.
      if (!inserted && g.label < it->second) {
        it->second = g.label;
      }
      max_tokens_ = std::max(max_tokens_, tokenize(entry, lexicon).size());
    }
  }
}

std::optional<EntityLabel> GazetteerIndex::find(std::string_view surface) const {
  auto it = labels_.find(std::string(surface));
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::vector<Entity> recognize_entities(const Sentence &sentence,
                                       const GazetteerIndex &gazetteers) {
  const std::vector<Token> &tokens = sentence.tokens;
  const std::size_t n = tokens.size();
  std::vector<bool> covered(n, false);
  std::vector<Entity> entities;
  auto claim = [&](EntityLabel label, std::size_t first, std::size_t last,
                   EntitySource source) {
    entities.push_back(make_entity(label, TokenRange{first, last}, source));
    for (std::size_t k = first; k <= last; ++k) covered[k] = true;
  };

  // Gazetteer longest match.
  if (!gazetteers.empty()) {
    for (std::size_t i = 0; i < n;) {
      std::optional<std::pair<std::size_t, EntityLabel>> best;
      const std::size_t limit = std::min(n, i + gazetteers.max_tokens());
      for (std::size_t j = i; j < limit; ++j) {
        if (auto label = gazetteers.find(range_text(sentence, {i, j}))) {
          best = std::make_pair(j, *label);
        }
      }
      if (best) {
        claim(best->second, i, best->first, EntitySource::GAZETTEER);
        i = best->first + 1;
      } else {
        ++i;
      }
    }
  }

  // Regex-style patterns over uncovered tokens.
  auto free_at = [&](std::size_t k) { return k < n && !covered[k]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    const Token &t = tokens[i];
    const bool month =
        (t.pos == Pos::PROPN || t.pos == Pos::NOUN) &&
        std::find(kMonths.begin(), kMonths.end(), t.text) != kMonths.end();
    if (month) {
      std::size_t last = i;
      if (free_at(last + 1) && is_day(tokens[last + 1])) ++last;
      if (free_at(last + 2) && tokens[last + 1].text == "," &&
          !covered[last + 1] && is_year(tokens[last + 2])) {
        last += 2;
      } else if (free_at(last + 1) && is_year(tokens[last + 1])) {
        ++last;
      }
      claim(EntityLabel::DATE, i, last, EntitySource::REGEX);
      i = last;
      continue;
    }
    if (is_clock(t)) {
      std::size_t last = i;
      if (free_at(i + 1) &&
          (tokens[i + 1].text == "a.m." || tokens[i + 1].text == "p.m.")) {
        ++last;
      }
      claim(EntityLabel::TIME, i, last, EntitySource::REGEX);
      i = last;
      continue;
    }
    if (is_year(t)) {
      claim(EntityLabel::DATE, i, i, EntitySource::REGEX);
      continue;
    }
    if (t.pos == Pos::NUM) {
      claim(EntityLabel::NUMBER, i, i, EntitySource::REGEX);
    }
  }

  // Capitalization runs.
  for (std::size_t i = 0; i < n;) {
    if (covered[i] || tokens[i].pos != Pos::PROPN) {
      ++i;
      continue;
    }
    std::size_t last = i;
    while (free_at(last + 1) && tokens[last + 1].pos == Pos::PROPN) ++last;
    const bool titled = i > 0 && is_title_cue(tokens[i - 1].text);
    claim(titled ? EntityLabel::PERSON : EntityLabel::MISC, i, last,
          EntitySource::CAPITALIZATION);
    i = last + 1;
  }

  std::sort(entities.begin(), entities.end(),
            [](const Entity &a, const Entity &b) {
              return a.tokens.first < b.tokens.first;
            });
  return entities;
}

// --- Chunks and facts ----------------------------------------------------

std::vector<Chunk> chunk_phrases(const Sentence &sentence) {
  const std::vector<Token> &tokens = sentence.tokens;
  std::vector<Chunk> chunks;
  for (std::size_t i = 0; i < tokens.size();) {
    if (tokens[i].pos == Pos::ADP) {
      if (auto last = match_np(tokens, i + 1)) {
        chunks.push_back({TokenRange{i, *last}, ChunkKind::PP});
        chunks.push_back({TokenRange{i + 1, *last}, ChunkKind::NP});
        i = *last + 1;
        continue;
      }
    } else if (auto last = match_np(tokens, i)) {
      chunks.push_back({TokenRange{i, *last}, ChunkKind::NP});
      i = *last + 1;
      continue;
    }
    ++i;
  }
  return chunks;
}

TokenRange head_tokens(const Sentence &sentence, const Chunk &np) {
  const std::vector<Token> &tokens = sentence.tokens;
  const Pos head_pos = tokens[np.tokens.last].pos;
  std::size_t first = np.tokens.last;
  while (first > np.tokens.first && tokens[first - 1].pos == head_pos &&
         !is_title_cue(tokens[first - 1].text)) {
    --first;
  }
  return TokenRange{first, np.tokens.last};
}

std::string_view adjunct_name(AdjunctKind kind) {
  switch (kind) {
    case AdjunctKind::TIME: return "TIME";
    case AdjunctKind::PLACE: return "PLACE";
    case AdjunctKind::OTHER: return "OTHER";
  }
  return "";
}

namespace {

const Chunk *pp_covering(std::span<const Chunk> chunks, std::size_t i) {
  for (const Chunk &c : chunks) {
    if (c.kind == ChunkKind::PP && c.tokens.contains(i)) return &c;
  }
  return nullptr;
}

const Chunk *chunk_starting(std::span<const Chunk> chunks, std::size_t i,
                            ChunkKind kind) {
  for (const Chunk &c : chunks) {
    if (c.kind == kind && c.tokens.first == i) return &c;
  }
  return nullptr;
}

std::optional<Entity> entity_exactly(std::span<const Entity> entities,
                                     TokenRange range) {
  for (const Entity &e : entities) {
    if (e.tokens == range) return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> find_main_verb(const Sentence &sentence,
                                          std::span<const Chunk> chunks) {
  const std::vector<Token> &tokens = sentence.tokens;
  std::optional<std::size_t> verb;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && is_subordinator(utf8::to_lower(tokens[i].text))) break;
    if (tokens[i].pos == Pos::VERB && !pp_covering(chunks, i)) {
      verb = i;
      break;
    }
  }
  if (!verb) return std::nullopt;
  // Auxiliary chains resolve to their last verb: "has discovered".
  while (is_auxiliary_lemma(tokens[*verb].lemma)) {
    std::size_t j = *verb + 1;
    while (j < tokens.size() &&
           (tokens[j].pos == Pos::ADV || tokens[j].pos == Pos::PART)) {
      ++j;
    }
    if (j < tokens.size() && tokens[j].pos == Pos::VERB &&
        !pp_covering(chunks, j)) {
      verb = j;
    } else {
      break;
    }
  }
  return verb;
}

std::vector<Fact> extract_facts(const Sentence &sentence,
                                std::span<const Entity> entities,
                                std::span<const Chunk> chunks,
                                std::string_view document_id) {
  const std::vector<Token> &tokens = sentence.tokens;
  const std::optional<std::size_t> verb = find_main_verb(sentence, chunks);
  if (!verb) return {};

  const Chunk *subject = nullptr;
  for (const Chunk &c : chunks) {
    if (c.kind == ChunkKind::NP && c.tokens.last < *verb &&
        !pp_covering(chunks, c.tokens.first)) {
      subject = &c;
    }
  }
  if (!subject) return {};

  Fact fact;
  fact.sentence = SentenceRef{std::string(document_id), sentence.index};
  fact.subject = *subject;
  fact.verb = *verb;
  fact.verb_lemma = tokens[*verb].lemma;
  fact.subject_entity =
      entity_exactly(entities, head_tokens(sentence, *subject));

  // The clause window after the verb: PPs, NPs, adverbs and particles.
  for (std::size_t j = *verb + 1; j < tokens.size();) {
    if (const Chunk *pp = chunk_starting(chunks, j, ChunkKind::PP)) {
      Adjunct adjunct;
      adjunct.chunk = *pp;
      const TokenRange inner{pp->tokens.first + 1, pp->tokens.last};
      const Entity *time = nullptr;
      const Entity *place = nullptr;
      // An entity that starts inside the PP may run past it ("on March 3,
      // 1921" chunks as [on March 3]); the adjunct then extends to its end.
      for (const Entity &e : entities) {
        if (!inner.contains(e.tokens.first)) continue;
        if (!time && (e.label == EntityLabel::DATE ||
                      e.label == EntityLabel::TIME)) {
          time = &e;
        }
        if (!place && e.label == EntityLabel::LOCATION) place = &e;
      }
      const std::string prep = utf8::to_lower(tokens[pp->tokens.first].text);
      bool has_propn = false;
      for (std::size_t k = inner.first; k <= inner.last; ++k) {
        has_propn |= tokens[k].pos == Pos::PROPN;
      }
      if (time) {
        adjunct.kind = AdjunctKind::TIME;
        adjunct.entity = *time;
      } else if (place) {
        adjunct.kind = AdjunctKind::PLACE;
        adjunct.entity = *place;
      } else if ((prep == "in" || prep == "at" || prep == "near") &&
                 has_propn) {
        adjunct.kind = AdjunctKind::PLACE;
        adjunct.entity = entity_exactly(
            entities, head_tokens(sentence, Chunk{inner, ChunkKind::NP}));
      } else {
        adjunct.kind = AdjunctKind::OTHER;
      }
      if (adjunct.entity && adjunct.entity->tokens.last > adjunct.chunk.tokens.last) {
        adjunct.chunk.tokens.last = adjunct.entity->tokens.last;
      }
      j = adjunct.chunk.tokens.last + 1;
      fact.adjuncts.push_back(std::move(adjunct));
      continue;
    }
    if (const Chunk *np = chunk_starting(chunks, j, ChunkKind::NP)) {
      if (!fact.object) {
        fact.object = *np;
        fact.object_entity = entity_exactly(entities, head_tokens(sentence, *np));
      }
      j = np->tokens.last + 1;
      continue;
    }
    if (tokens[j].pos == Pos::ADV || tokens[j].pos == Pos::PART) {
      ++j;
      continue;
    }
    break;
  }
  return {std::move(fact)};
}

SentenceAnalysis analyze(const Sentence &sentence,
                         const GazetteerIndex &gazetteers,
                         std::string_view document_id) {
  SentenceAnalysis result;
  result.entities = recognize_entities(sentence, gazetteers);
  result.chunks = chunk_phrases(sentence);
  result.facts =
      extract_facts(sentence, result.entities, result.chunks, document_id);
  return result;
}

}  // namespace synqa
