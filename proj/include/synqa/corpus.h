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

// Plain-text corpus ingestion. Documents are separated by a line holding
// only "---"; a document may open with a "# <title>" line.

#ifndef SYNQA_CORPUS_H_
#define SYNQA_CORPUS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace synqa {

struct RawDocument {
  std::string id;
  std::string title;
  std::string text;
};

// Ids are "doc-NNNN", numbered from 1 in source order. Documents without a
// title line use their id as title.
std::vector<RawDocument> parse_corpus(std::string_view content);

std::string document_id(std::size_t ordinal);

}  // namespace synqa

#endif  // SYNQA_CORPUS_H_
