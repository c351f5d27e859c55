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

// QA dataset model and its canonical JSON form.
//
// The layout follows the SQuAD structure (articles -> paragraphs -> qas)
// with a top-level version and a per-question meta object. answer_start
// counts code points into the paragraph context.

#ifndef SYNQA_DATASET_H_
#define SYNQA_DATASET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synqa/templates.h"

namespace synqa {

inline constexpr std::string_view kDatasetVersion = "synqa-1.0";
// Version given to SQuAD v1.1 files read in compatibility mode.
inline constexpr std::string_view kCompatVersion = "squad-compat";

enum class Origin { REAL, SYNTHETIC };
std::string_view origin_name(Origin origin);

struct Answer {
  std::string text;
  std::size_t answer_start = 0;
  bool operator==(const Answer &) const = default;
};

struct QAMeta {
  Origin origin = Origin::REAL;
  std::optional<std::string> template_id;
  std::optional<WhType> wh_type;
  std::optional<double> score;
  bool operator==(const QAMeta &) const = default;
};

struct QAEntry {
  std::string id;
  std::string question;
  std::vector<Answer> answers;
  QAMeta meta;
  bool operator==(const QAEntry &) const = default;
};

struct Paragraph {
  std::string context;
  std::vector<QAEntry> qas;
  bool operator==(const Paragraph &) const = default;
};

struct Article {
  std::string title;
  std::vector<Paragraph> paragraphs;
  bool operator==(const Article &) const = default;
};

struct QADataset {
  std::string version{kDatasetVersion};
  std::vector<Article> articles;

  std::size_t pair_count() const;
  bool operator==(const QADataset &) const = default;
};

// Parses and fully validates a dataset. Structural problems throw ParseError
// whose message starts with the JSON path (data[0].paragraphs[1].qas[2]...);
// semantic problems (span mismatch, duplicate ids) throw ValidationError
// listing every violation. SQuAD v1.1 files (version absent or "1.1") are
// accepted, tagged kCompatVersion with origin real and unknown keys ignored.
QADataset read_dataset(std::string_view bytes);

// Canonical bytes: fixed key order, 2-space indent, UTF-8, trailing newline.
std::string write_dataset(const QADataset &dataset);

// Span validity, id uniqueness and value ranges. Empty when clean.
std::vector<std::string> check_dataset(const QADataset &dataset);

// One question with the article title and context it belongs to.
struct FlatPair {
  std::string title;
  std::string context;
  QAEntry qa;
};

std::vector<FlatPair> flatten(const QADataset &dataset);

// Inverse of flatten: consecutive pairs sharing a title form one article,
// and consecutive pairs sharing a context within it one paragraph.
QADataset assemble(std::vector<FlatPair> pairs,
                   std::string version = std::string(kDatasetVersion));

}  // namespace synqa

#endif  // SYNQA_DATASET_H_
