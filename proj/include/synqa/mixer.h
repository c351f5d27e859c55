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

// Real/synthetic dataset mixing at a fixed synthetic-to-real ratio, and
// dataset statistics.

#ifndef SYNQA_MIXER_H_
#define SYNQA_MIXER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synqa/dataset.h"

namespace synqa {

// 64-bit LCG (Knuth's MMIX constants):
//   x' = 6364136223846793005 * x + 1442695040888963407 (mod 2^64)
// The state starts at the seed; each draw advances once and uses the high
// 32 bits. Bounded draws map them onto [0, bound) by multiply-shift.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound); bound must be in [1, 2^32].
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// In-place Fisher-Yates: for i = n-1 .. 1 swap items[i], items[below(i+1)].
template <typename T>
void shuffle(std::vector<T> &items, Lcg &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    if (j != i - 1) std::swap(items[i - 1], items[j]);
  }
}

// floor(x + 0.5), with a small allowance for representation error.
std::size_t round_half_up(double x);

enum class Selection { TOP_SCORE, SEEDED_UNIFORM };
std::string_view selection_name(Selection selection);
std::optional<Selection> parse_selection(std::string_view name);

struct MixConfig {
  double ratio = 0.1;  // synthetic count / real count
  std::uint64_t seed = 42;
  bool allow_short = false;
  Selection selection = Selection::TOP_SCORE;

  void validate() const;  // throws ConfigError
};

// round_half_up(ratio * n_real).
std::size_t synthetic_target(double ratio, std::size_t n_real);

// Keeps every real pair, adds round_half_up(ratio * n_real) synthetic ones
// and shuffles the union with the seeded LCG. Pairs are tagged with the
// origin of the input they came from. Throws ValidationError when the pool
// is too small (unless allow_short) or ids collide.
QADataset mix(const QADataset &real, const QADataset &synthetic,
              const MixConfig &config);

// Answer lengths in words: 1, 2, 3, 4-5, 6-10, 11+.
inline constexpr std::array<std::string_view, 6> kLengthBuckets = {
    "1", "2", "3", "4-5", "6-10", "11+"};

struct DatasetStats {
  std::size_t total = 0;
  std::size_t synthetic_count = 0;
  std::size_t real_count = 0;
  // Synthetic pairs only.
  std::array<std::size_t, 6> per_wh_type{};
  std::map<std::string, std::size_t> per_template;
  std::array<std::size_t, 6> answer_length_histogram{};
  double realized_ratio = 0.0;  // 0 when there are no real pairs
};

DatasetStats compute_stats(const QADataset &dataset);

std::size_t length_bucket(std::size_t words);

}  // namespace synqa

#endif  // SYNQA_MIXER_H_
