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

#include <algorithm>

#include "synqa/analysis.h"
#include "synqa/errors.h"
#include "synqa/utf8.h"

namespace synqa {

std::vector<Gazetteer> load_gazetteers(const std::filesystem::path &dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("gazetteer directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<Gazetteer> gazetteers;
  for (const auto &path : files) {
    std::string stem = path.stem().string();
    std::transform(stem.begin(), stem.end(), stem.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    std::optional<EntityLabel> label = parse_label(stem);
    if (!label) {
      throw ConfigError("gazetteers",
                        "file " + path.filename().string() +
                            " does not name an entity label");
    }
    gazetteers.push_back(parse_gazetteer(*label, read_file(path)));
  }
  return gazetteers;
}

}  // namespace synqa
