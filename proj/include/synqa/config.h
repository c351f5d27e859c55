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

// Key-value run configuration.
//
//   # comment
//   corpus = corpus.txt
//   ratio = 0.3
//
// Keys: corpus, templates, gazetteers, out, min_score,
// max_pairs_per_sentence, seed, lowercase, ratio, allow_short, selection,
// workers. Paths are relative to the file's directory.

#ifndef SYNQA_CONFIG_H_
#define SYNQA_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "synqa/generation.h"
#include "synqa/mixer.h"

namespace synqa {

struct RunConfig {
  GenerationConfig generation;
  MixConfig mix;
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> templates;
  std::optional<std::filesystem::path> gazetteers;
  std::optional<std::filesystem::path> out;
  std::size_t workers = 1;

  // Keys that were not set and hold their default.
  std::set<std::string> defaulted;
};

// Every accepted key, in echo order.
const std::vector<std::string_view> &config_keys();

// Parses config text. Relative paths resolve against `base_dir`; input paths
// (corpus, templates, gazetteers) must exist. Throws ConfigError naming the
// offending key (or ParseError for a line without '=').
RunConfig parse_config(std::string_view content,
                       const std::filesystem::path &base_dir);

// Reads and parses a config file. Throws IoError if unreadable.
RunConfig load_config(const std::filesystem::path &path);

// Marks `key` as explicitly set (used when a flag overrides the file).
void mark_set(RunConfig &config, std::string_view key);

// Effective configuration, one `key = value` line per key in config_keys()
// order, defaults annotated, plus the score formula version.
std::string echo_config(const RunConfig &config);

}  // namespace synqa

#endif  // SYNQA_CONFIG_H_
