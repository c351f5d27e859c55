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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "synqa/dataset.h"
#include "synqa/generation.h"

namespace synqa {
namespace {

std::string generate_golden(std::size_t workers = 1) {
  fixtures::GoldenInputs in = fixtures::golden_inputs();
  GazetteerIndex index(in.gazetteers, Lexicon::shared());
  CorpusResult result = generate_corpus(in.corpus, in.templates, index,
                                        GenerationConfig{}, Lexicon::shared(), workers);
  return write_dataset(result.dataset);
}

TEST(Golden, CorpusMatchesHandTrace) {
  EXPECT_EQ(generate_golden(), fixtures::golden_expected());
}

TEST(Golden, ExpectedFileIsCanonical) {
  const std::string expected = fixtures::golden_expected();
  EXPECT_EQ(write_dataset(read_dataset(expected)), expected);
}

TEST(Golden, MarieCurieWhoQuestion) {
  QADataset d = read_dataset(fixtures::golden_expected());
  const QAEntry &qa = d.articles.at(0).paragraphs.at(0).qas.at(0);
  EXPECT_EQ(qa.question, "Who discovered radium?");
  EXPECT_EQ(qa.answers.at(0).text, "Marie Curie");
  EXPECT_EQ(qa.answers.at(0).answer_start, 0u);
}

TEST(Golden, FactAnnotations) {
  std::size_t sentences = 0;
  std::vector<std::string> mismatches = fixtures::check_fact_annotations(&sentences);
  EXPECT_EQ(sentences, 50u);
  for (const std::string &m : mismatches) ADD_FAILURE() << m;
}

}  // namespace
}  // namespace synqa
