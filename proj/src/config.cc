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

#include "synqa/config.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "synqa/errors.h"
#include "synqa/lexicon.h"

namespace synqa {

namespace {

namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view key, std::string_view value) {
  double out = 0.0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size() || !std::isfinite(out)) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(value) + "'");
  }
  return out;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw ConfigError(std::string(key),
                      "expected a non-negative integer, got '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "yes" || value == "on" || value == "1") return true;
  if (value == "false" || value == "no" || value == "off" || value == "0") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" + std::string(value) + "'");
}

fs::path input_path(std::string_view key, std::string_view value,
                    const fs::path &base_dir) {
  fs::path path = fs::path(std::string(value));
  if (path.is_relative()) path = base_dir / path;
  if (!fs::exists(path)) {
    throw ConfigError(std::string(key), "no such file or directory: " + path.string());
  }
  return path;
}

std::string format_real(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

const std::vector<std::string_view> &config_keys() {
  static const std::vector<std::string_view> keys = {
      "corpus",     "templates", "gazetteers", "out",
      "min_score",  "max_pairs_per_sentence", "seed", "lowercase",
      "ratio",      "allow_short", "selection", "workers"};
  return keys;
}

void mark_set(RunConfig &config, std::string_view key) {
  config.defaulted.erase(std::string(key));
}

RunConfig parse_config(std::string_view content, const fs::path &base_dir) {
  RunConfig config;
  for (std::string_view key : config_keys()) config.defaulted.emplace(key);

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() : nl + 1;
    ++line_number;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_number);
    }
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const std::string k(key);
    if (!config.defaulted.count(k)) {
      bool known = false;
      for (std::string_view name : config_keys()) known |= name == key;
      throw ConfigError(k, known ? "set more than once" : "unknown key");
    }

    if (key == "corpus") {
      config.corpus = input_path(key, value, base_dir);
    } else if (key == "templates") {
      config.templates = input_path(key, value, base_dir);
    } else if (key == "gazetteers") {
      config.gazetteers = input_path(key, value, base_dir);
    } else if (key == "out") {
      fs::path path = fs::path(std::string(value));
      config.out = path.is_relative() ? base_dir / path : path;
    } else if (key == "min_score") {
      config.generation.min_score = parse_real(key, value);
    } else if (key == "max_pairs_per_sentence") {
      config.generation.max_pairs_per_sentence = parse_unsigned(key, value);
    } else if (key == "seed") {
      config.generation.seed = parse_unsigned(key, value);
      config.mix.seed = config.generation.seed;
    } else if (key == "lowercase") {
      config.generation.lowercase = parse_bool(key, value);
    } else if (key == "ratio") {
      config.mix.ratio = parse_real(key, value);
    } else if (key == "allow_short") {
      config.mix.allow_short = parse_bool(key, value);
    } else if (key == "selection") {
      auto selection = parse_selection(value);
      if (!selection) {
        throw ConfigError(k, "expected top_score or seeded_uniform");
      }
      config.mix.selection = *selection;
    } else if (key == "workers") {
      config.workers = parse_unsigned(key, value);
      if (config.workers < 1) throw ConfigError(k, "must be at least 1");
    }
    config.defaulted.erase(k);
  }
  config.generation.validate();
  config.mix.validate();
  return config;
}

RunConfig load_config(const fs::path &path) {
  std::string content = read_file(path);
  fs::path base = path.parent_path();
  if (base.empty()) base = ".";
  return parse_config(content, base);
}

std::string echo_config(const RunConfig &config) {
  auto path_value = [](const std::optional<fs::path> &p) {
    return p ? p->string() : std::string();
  };
  std::ostringstream out;
  for (std::string_view key : config_keys()) {
    std::string value;
    if (key == "corpus") value = path_value(config.corpus);
    else if (key == "templates") value = path_value(config.templates);
    else if (key == "gazetteers") value = path_value(config.gazetteers);
    else if (key == "out") value = path_value(config.out);
    else if (key == "min_score") value = format_real(config.generation.min_score);
    else if (key == "max_pairs_per_sentence")
      value = std::to_string(config.generation.max_pairs_per_sentence);
    else if (key == "seed") value = std::to_string(config.generation.seed);
    else if (key == "lowercase") value = config.generation.lowercase ? "true" : "false";
    else if (key == "ratio") value = format_real(config.mix.ratio);
    else if (key == "allow_short") value = config.mix.allow_short ? "true" : "false";
    else if (key == "selection") value = std::string(selection_name(config.mix.selection));
    else if (key == "workers") value = std::to_string(config.workers);
    out << key << " = " << value;
    if (config.defaulted.count(std::string(key))) out << "  # default";
    out << '\n';
  }
  out << "score_formula = " << kScoreFormula << '\n';
  return out.str();
}

}  // namespace synqa
