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

#include "synqa/mixer.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

#include "synqa/errors.h"

namespace synqa {

std::uint64_t Lcg::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

std::uint64_t Lcg::below(std::uint64_t bound) {
  return ((next() >> 32) * bound) >> 32;
}

std::size_t round_half_up(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5 + 1e-9));
}

std::string_view selection_name(Selection selection) {
  return selection == Selection::TOP_SCORE ? "top_score" : "seeded_uniform";
}

std::optional<Selection> parse_selection(std::string_view name) {
  std::string lower(name);
  for (char &c : lower) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (lower == "top_score") return Selection::TOP_SCORE;
  if (lower == "seeded_uniform") return Selection::SEEDED_UNIFORM;
  return std::nullopt;
}

void MixConfig::validate() const {
  if (!(ratio >= 0.0) || !std::isfinite(ratio)) {
    throw ConfigError("ratio", "must be a finite number >= 0");
  }
}

std::size_t synthetic_target(double ratio, std::size_t n_real) {
  return round_half_up(ratio * static_cast<double>(n_real));
}

QADataset mix(const QADataset &real, const QADataset &synthetic,
              const MixConfig &config) {
  config.validate();
  std::vector<FlatPair> reals = flatten(real);
  std::vector<FlatPair> pool = flatten(synthetic);
  for (FlatPair &p : reals) p.qa.meta.origin = Origin::REAL;
  for (FlatPair &p : pool) p.qa.meta.origin = Origin::SYNTHETIC;

  std::size_t need = synthetic_target(config.ratio, reals.size());
  if (need > pool.size()) {
    if (!config.allow_short) {
      throw ValidationError("synthetic pool too small: need " +
                            std::to_string(need) + ", have " +
                            std::to_string(pool.size()));
    }
    need = pool.size();
  }

  Lcg rng(config.seed);
  if (config.selection == Selection::TOP_SCORE) {
    for (const FlatPair &p : pool) {
      if (!p.qa.meta.score) {
        throw ValidationError("synthetic pair '" + p.qa.id + "' has no score");
      }
    }
    std::sort(pool.begin(), pool.end(), [](const FlatPair &a, const FlatPair &b) {
      if (*a.qa.meta.score != *b.qa.meta.score) {
        return *a.qa.meta.score > *b.qa.meta.score;
      }
      return a.qa.id < b.qa.id;
    });
  } else {
    std::sort(pool.begin(), pool.end(), [](const FlatPair &a, const FlatPair &b) {
      return a.qa.id < b.qa.id;
    });
    for (std::size_t i = 0; i < need; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      if (j != i) std::swap(pool[i], pool[j]);
    }
  }
  pool.resize(need);

  std::vector<FlatPair> all = std::move(reals);
  all.insert(all.end(), std::make_move_iterator(pool.begin()),
             std::make_move_iterator(pool.end()));
  std::unordered_set<std::string> ids;
  for (const FlatPair &p : all) {
    if (!ids.insert(p.qa.id).second) {
      throw ValidationError("duplicate id '" + p.qa.id +
                            "' across real and synthetic inputs");
    }
  }
  shuffle(all, rng);
  return assemble(std::move(all));
}

std::size_t length_bucket(std::size_t words) {
  if (words <= 1) return 0;
  if (words == 2) return 1;
  if (words == 3) return 2;
  if (words <= 5) return 3;
  if (words <= 10) return 4;
  return 5;
}

namespace {

std::size_t word_count(std::string_view text) {
  std::size_t words = 0;
  bool in_word = false;
  for (char c : text) {
    bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r';
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

}  // namespace

DatasetStats compute_stats(const QADataset &dataset) {
  DatasetStats stats;
  for (const FlatPair &p : flatten(dataset)) {
    ++stats.total;
    if (p.qa.meta.origin == Origin::SYNTHETIC) {
      ++stats.synthetic_count;
      if (p.qa.meta.wh_type) {
        ++stats.per_wh_type[static_cast<std::size_t>(*p.qa.meta.wh_type)];
      }
      if (p.qa.meta.template_id) ++stats.per_template[*p.qa.meta.template_id];
    } else {
      ++stats.real_count;
    }
    if (!p.qa.answers.empty()) {
      ++stats.answer_length_histogram[length_bucket(word_count(p.qa.answers[0].text))];
    }
  }
  if (stats.real_count > 0) {
    stats.realized_ratio = static_cast<double>(stats.synthetic_count) /
                           static_cast<double>(stats.real_count);
  }
  return stats;
}

}  // namespace synqa
