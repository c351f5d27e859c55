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

#include "synqa/corpus.h"

#include <cstdio>

namespace synqa {

namespace {

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::string document_id(std::size_t ordinal) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "doc-%04zu", ordinal);
  return buffer;
}

std::vector<RawDocument> parse_corpus(std::string_view content) {
  if (content.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    return {};
  }
  std::vector<std::vector<std::string_view>> groups(1);
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (strip_cr(line) == "---") {
      groups.emplace_back();
    } else {
      groups.back().push_back(line);
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  std::vector<RawDocument> docs;
  for (auto &lines : groups) {
    RawDocument doc;
    doc.id = document_id(docs.size() + 1);
    std::size_t first = 0;
    while (first < lines.size() && is_blank(lines[first])) ++first;
    if (first < lines.size() && strip_cr(lines[first]).starts_with("# ")) {
      std::string_view title = strip_cr(lines[first]).substr(2);
      while (!title.empty() && title.front() == ' ') title.remove_prefix(1);
      while (!title.empty() && title.back() == ' ') title.remove_suffix(1);
      doc.title = std::string(title);
      ++first;
    }
    for (std::size_t i = first; i < lines.size(); ++i) {
      if (i > first) doc.text.push_back('\n');
      doc.text.append(lines[i]);
    }
    if (doc.title.empty()) doc.title = doc.id;
    docs.push_back(std::move(doc));
  }
  // A trailing separator does not open a new document.
  if (docs.size() > 1 && groups.back().empty()) docs.pop_back();
  return docs;
}

}  // namespace synqa
