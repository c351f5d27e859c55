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

#include "synqa/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "synqa/analysis.h"
#include "synqa/config.h"
#include "synqa/corpus.h"
#include "synqa/dataset.h"
#include "synqa/errors.h"
#include "synqa/generation.h"
#include "synqa/lexicon.h"
#include "synqa/mixer.h"
#include "synqa/templates.h"

namespace synqa {

namespace {

namespace fs = std::filesystem;

struct GenerateFlags {
  std::optional<std::string> config;
  std::optional<std::string> corpus;
  std::optional<std::string> templates;
  std::optional<std::string> gazetteers;
  std::optional<std::string> out;
  std::optional<double> min_score;
  std::optional<std::size_t> max_per_sentence;
  std::optional<std::uint64_t> seed;
  bool lowercase = false;
  std::optional<std::size_t> workers;
  bool echo = false;
};

struct MixFlags {
  std::optional<std::string> config;
  std::string real;
  std::string synthetic;
  std::optional<std::string> out;
  std::optional<double> ratio;
  std::optional<std::uint64_t> seed;
  bool allow_short = false;
  std::optional<std::string> selection;
  bool echo = false;
};

struct DatasetFlags {
  std::string dataset;
  std::string format = "table";
};

// Thrown inside commands to leave with a given status.
struct Exit {
  int code;
};

std::string format_fixed(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", x);
  return buffer;
}

void write_output(const fs::path &path, const std::string &bytes) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << bytes;
  file.close();
  if (!file) throw IoError("cannot write " + path.string());
}

RunConfig base_config(const std::optional<std::string> &config_path,
                      std::ostream &err) {
  try {
    if (config_path) return load_config(*config_path);
    return parse_config("", ".");
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    throw Exit{kExitIo};
  } catch (const Error &e) {
    err << "error: config: " << e.what() << '\n';
    throw Exit{kExitUsage};
  }
}

// Reads and validates a dataset file; maps failures onto exit codes.
QADataset load_dataset(const std::string &path, std::ostream &err) {
  std::string bytes;
  try {
    bytes = read_file(path);
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    throw Exit{kExitIo};
  }
  try {
    return read_dataset(bytes);
  } catch (const ValidationError &e) {
    err << "error: " << path << ": invalid dataset\n";
    for (const std::string &v : e.violations()) err << "  " << v << '\n';
    throw Exit{kExitValidation};
  } catch (const ParseError &e) {
    err << "error: " << path << ": " << e.what() << '\n';
    throw Exit{kExitValidation};
  }
}

int cmd_generate(const GenerateFlags &flags, const CLI::App &sub,
                 std::ostream &out, std::ostream &err) {
  RunConfig config = base_config(flags.config, err);
  if (flags.corpus) {
    config.corpus = *flags.corpus;
    mark_set(config, "corpus");
  }
  if (flags.templates) {
    config.templates = *flags.templates;
    mark_set(config, "templates");
  }
  if (flags.gazetteers) {
    config.gazetteers = *flags.gazetteers;
    mark_set(config, "gazetteers");
  }
  if (flags.out) {
    config.out = *flags.out;
    mark_set(config, "out");
  }
  if (flags.min_score) {
    config.generation.min_score = *flags.min_score;
    mark_set(config, "min_score");
  }
  if (flags.max_per_sentence) {
    config.generation.max_pairs_per_sentence = *flags.max_per_sentence;
    mark_set(config, "max_pairs_per_sentence");
  }
  if (flags.seed) {
    config.generation.seed = *flags.seed;
    mark_set(config, "seed");
  }
  if (flags.lowercase) {
    config.generation.lowercase = true;
    mark_set(config, "lowercase");
  }
  if (flags.workers) {
    config.workers = *flags.workers;
    mark_set(config, "workers");
  }
  if (!config.corpus || !config.out) {
    err << "error: generate needs " << (config.corpus ? "--out" : "--corpus")
        << "\n\n"
        << sub.help();
    return kExitUsage;
  }
  const fs::path data_dir = default_data_dir();
  if (!config.templates) config.templates = data_dir / "templates" / "default.tpl";
  if (!config.gazetteers && fs::is_directory(data_dir / "gazetteers")) {
    config.gazetteers = data_dir / "gazetteers";
  }
  if (flags.echo) out << echo_config(config);

  TemplateSet templates;
  std::string corpus_text;
  std::vector<Gazetteer> gazetteers;
  try {
    corpus_text = read_file(*config.corpus);
    std::string template_text = read_file(*config.templates);
    if (config.gazetteers) gazetteers = load_gazetteers(*config.gazetteers);
    try {
      templates = parse_template_file(template_text);
      check_template_set(templates);
    } catch (const Error &e) {
      err << "error: " << config.templates->string() << ": " << e.what() << '\n';
      return kExitValidation;
    }
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const Lexicon *lexicon = nullptr;
  try {
    lexicon = &Lexicon::shared();
  } catch (const Error &e) {
    err << "error: lexicon: " << e.what() << '\n';
    return kExitIo;
  }
  GazetteerIndex index(gazetteers, *lexicon);
  std::vector<RawDocument> corpus = parse_corpus(corpus_text);
  CorpusResult result = generate_corpus(corpus, templates, index, config.generation,
                                        *lexicon, config.workers);
  try {
    write_output(*config.out, write_dataset(result.dataset));
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  const GenerationStats &s = result.stats;
  err << "generate: documents=" << s.documents << " sentences=" << s.sentences
      << " facts=" << s.facts << " emitted=" << s.emitted
      << " filtered=" << s.filtered << '\n';
  return kExitOk;
}

int cmd_mix(const MixFlags &flags, std::ostream &out, std::ostream &err) {
  RunConfig config = base_config(flags.config, err);
  if (flags.out) {
    config.out = *flags.out;
    mark_set(config, "out");
  }
  if (flags.ratio) {
    config.mix.ratio = *flags.ratio;
    mark_set(config, "ratio");
  }
  if (flags.seed) {
    config.mix.seed = *flags.seed;
    mark_set(config, "seed");
  }
  if (flags.allow_short) {
    config.mix.allow_short = true;
    mark_set(config, "allow_short");
  }
  if (flags.selection) {
    auto selection = parse_selection(*flags.selection);
    if (!selection) {
      err << "error: --selection must be top_score or seeded_uniform\n";
      return kExitUsage;
    }
    config.mix.selection = *selection;
    mark_set(config, "selection");
  }
  if (!config.out) {
    err << "error: mix needs --out\n";
    return kExitUsage;
  }
  if (flags.echo) out << echo_config(config);

  QADataset real = load_dataset(flags.real, err);
  QADataset synthetic = load_dataset(flags.synthetic, err);
  QADataset mixed;
  try {
    mixed = mix(real, synthetic, config.mix);
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  try {
    write_output(*config.out, write_dataset(mixed));
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  DatasetStats stats = compute_stats(mixed);
  err << "mix: real=" << stats.real_count << " synthetic=" << stats.synthetic_count
      << " total=" << stats.total
      << " realized_ratio=" << format_fixed(stats.realized_ratio) << '\n';
  return kExitOk;
}

int cmd_stats(const DatasetFlags &flags, std::ostream &out, std::ostream &err) {
  QADataset dataset = load_dataset(flags.dataset, err);
  DatasetStats stats = compute_stats(dataset);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"total", std::to_string(stats.total)},
      {"real", std::to_string(stats.real_count)},
      {"synthetic", std::to_string(stats.synthetic_count)},
      {"realized_ratio", format_fixed(stats.realized_ratio)},
  };
  for (std::size_t i = 0; i < stats.per_wh_type.size(); ++i) {
    rows.emplace_back("wh_type." + std::string(wh_name(static_cast<WhType>(i))),
                      std::to_string(stats.per_wh_type[i]));
  }
  for (const auto &[id, count] : stats.per_template) {
    rows.emplace_back("template." + id, std::to_string(count));
  }
  for (std::size_t i = 0; i < kLengthBuckets.size(); ++i) {
    rows.emplace_back("answer_words." + std::string(kLengthBuckets[i]),
                      std::to_string(stats.answer_length_histogram[i]));
  }
  if (flags.format == "tsv") {
    for (const auto &[key, value] : rows) out << key << '\t' << value << '\n';
  } else {
    std::size_t width = 0;
    for (const auto &row : rows) width = std::max(width, row.first.size());
    for (const auto &[key, value] : rows) {
      out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
  }
  return kExitOk;
}

int cmd_validate(const DatasetFlags &flags, std::ostream &out, std::ostream &err) {
  std::string bytes;
  try {
    bytes = read_file(flags.dataset);
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  try {
    QADataset dataset = read_dataset(bytes);
    if (dataset.version == kCompatVersion) {
      out << "note: read in SQuAD v1.1 compatibility mode; all pairs have origin real\n";
    }
    out << "ok: " << dataset.pair_count() << " pairs\n";
    return kExitOk;
  } catch (const ValidationError &e) {
    for (const std::string &v : e.violations()) out << v << '\n';
  } catch (const ParseError &e) {
    out << e.what() << '\n';
  }
  return kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Rule-based synthetic QA generation and dataset mixing", "synqa"};
  app.require_subcommand(1);

  GenerateFlags gen;
  CLI::App *generate = app.add_subcommand("generate", "Generate QA pairs from a corpus");
  generate->add_option("--config", gen.config, "Key-value config file");
  generate->add_option("--corpus", gen.corpus, "Corpus file");
  generate->add_option("--templates", gen.templates, "Template file");
  generate->add_option("--gazetteers", gen.gazetteers, "Gazetteer directory");
  generate->add_option("--out", gen.out, "Output dataset path");
  generate->add_option("--min-score", gen.min_score, "Score threshold")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--max-per-sentence", gen.max_per_sentence,
                       "Per-sentence pair cap")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "Seed (recorded)");
  generate->add_flag("--lowercase", gen.lowercase, "Lower-case the corpus");
  generate->add_option("--workers", gen.workers, "Parallel documents")
      ->check(CLI::PositiveNumber);
  generate->add_flag("--echo-config", gen.echo, "Print the effective config");

  MixFlags mixf;
  CLI::App *mixc = app.add_subcommand("mix", "Mix real and synthetic datasets");
  mixc->add_option("--config", mixf.config, "Key-value config file");
  mixc->add_option("--real", mixf.real, "Real dataset")->required();
  mixc->add_option("--synthetic", mixf.synthetic, "Synthetic dataset")->required();
  mixc->add_option("--out", mixf.out, "Output dataset path");
  mixc->add_option("--ratio", mixf.ratio, "Synthetic count / real count")
      ->check(CLI::NonNegativeNumber);
  mixc->add_option("--seed", mixf.seed, "Seed for selection and shuffle");
  mixc->add_flag("--allow-short", mixf.allow_short, "Accept a short synthetic pool");
  mixc->add_option("--selection", mixf.selection, "top_score | seeded_uniform");
  mixc->add_flag("--echo-config", mixf.echo, "Print the effective config");

  DatasetFlags statsf;
  CLI::App *stats = app.add_subcommand("stats", "Print dataset statistics");
  stats->add_option("dataset,--dataset", statsf.dataset, "Dataset file")->required();
  stats->add_option("--format", statsf.format, "table | tsv")
      ->check(CLI::IsMember({"table", "tsv"}));

  DatasetFlags validf;
  CLI::App *validate = app.add_subcommand("validate", "Validate a dataset file");
  validate->add_option("dataset,--dataset", validf.dataset, "Dataset file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << (app.get_subcommands().empty() ? app.help()
                                          : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, *generate, out, err);
    if (mixc->parsed()) return cmd_mix(mixf, out, err);
    if (stats->parsed()) return cmd_stats(statsf, out, err);
    return cmd_validate(validf, out, err);
  } catch (const Exit &e) {
    return e.code;
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace synqa
