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

#include "synqa/dataset.h"
#include "synqa/errors.h"

namespace synqa {
namespace {

const char *kMinimal = R"({
  "version": "synqa-1.0",
  "data": [
    {
      "title": "Curie",
      "paragraphs": [
        {
          "context": "Marie Curie discovered radium in 1898.",
          "qas": [
            {
              "id": "q1",
              "question": "Who discovered radium?",
              "answers": [
                {
                  "text": "Marie Curie",
                  "answer_start": 0
                }
              ],
              "meta": {
                "origin": "synthetic",
                "template_id": "who1",
                "wh_type": "WHO",
                "score": 1.0
              }
            }
          ]
        }
      ]
    }
  ]
}
)";

std::string replace(std::string s, const std::string &from, const std::string &to) {
  std::size_t at = s.find(from);
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

TEST(ReadDataset, Minimal) {
  QADataset d = read_dataset(kMinimal);
  EXPECT_EQ(d.version, "synqa-1.0");
  EXPECT_EQ(d.pair_count(), 1u);
  const QAEntry &qa = d.articles.at(0).paragraphs.at(0).qas.at(0);
  EXPECT_EQ(qa.meta.origin, Origin::SYNTHETIC);
  EXPECT_EQ(qa.meta.template_id, "who1");
  EXPECT_EQ(qa.meta.wh_type, WhType::WHO);
  EXPECT_EQ(qa.meta.score, 1.0);
}

TEST(ReadDataset, MinimalIsCanonical) {
  EXPECT_EQ(write_dataset(read_dataset(kMinimal)), kMinimal);
}

TEST(ReadDataset, WrongAnswerStartNamesId) {
  std::string bad = replace(kMinimal, "\"answer_start\": 0", "\"answer_start\": 3");
  try {
    read_dataset(bad);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_NE(e.violations()[0].find("q1"), std::string::npos);
    EXPECT_NE(e.violations()[0].find("Marie Curie"), std::string::npos);
  }
}

TEST(ReadDataset, SquadCompat) {
  const char *squad = R"({"version": "1.1", "data": [{"title": "T", "paragraphs": [
    {"context": "Paris is large.", "qas": [
      {"id": "s1", "question": "What is large?", "is_impossible": false,
       "answers": [{"text": "Paris", "answer_start": 0}]}]}]}]})";
  QADataset d = read_dataset(squad);
  EXPECT_EQ(d.version, kCompatVersion);
  ASSERT_EQ(d.pair_count(), 1u);
  EXPECT_EQ(d.articles[0].paragraphs[0].qas[0].meta.origin, Origin::REAL);
  // The same without a version key.
  std::string unversioned = replace(squad, "\"version\": \"1.1\", ", "");
  EXPECT_EQ(read_dataset(unversioned).version, kCompatVersion);
}

TEST(ReadDataset, StructuralErrorsCarryPath) {
  std::string no_question = replace(kMinimal, "\"question\": \"Who discovered radium?\",", "");
  try {
    read_dataset(no_question);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(std::string(e.what()).rfind("data[0].paragraphs[0].qas[0]", 0), 0u) << e.what();
  }
  EXPECT_THROW(read_dataset("{not json"), ParseError);
  EXPECT_THROW(read_dataset("[]"), ParseError);
  EXPECT_THROW(read_dataset(replace(kMinimal, "synqa-1.0", "2.0")), ParseError);
  EXPECT_THROW(read_dataset(replace(kMinimal, "\"score\": 1.0", "\"score\": 1.0, \"x\": 1")),
               ParseError);
  EXPECT_THROW(read_dataset(replace(kMinimal, "\"origin\": \"synthetic\"", "\"origin\": \"fake\"")),
               ParseError);
}

TEST(ReadDataset, SemanticViolations) {
  EXPECT_THROW(read_dataset(replace(kMinimal, "\"score\": 1.0", "\"score\": 1.5")),
               ValidationError);
  EXPECT_THROW(read_dataset(replace(kMinimal, "\"id\": \"q1\"", "\"id\": \"\"")),
               ValidationError);
}

TEST(CheckDataset, DuplicateIds) {
  QADataset d = read_dataset(kMinimal);
  d.articles[0].paragraphs[0].qas.push_back(d.articles[0].paragraphs[0].qas[0]);
  std::vector<std::string> v = check_dataset(d);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("q1"), std::string::npos);
}

TEST(WriteDataset, EmptySkeleton) {
  EXPECT_EQ(write_dataset(QADataset{}), "{\n  \"version\": \"synqa-1.0\",\n  \"data\": []\n}\n");
  EXPECT_EQ(read_dataset(write_dataset(QADataset{})), QADataset{});
}

TEST(WriteDataset, NonAsciiPreserved) {
  QADataset d;
  QAEntry qa{"n1", "What cat?", {{"naïve cat", 4}}, {}};
  d.articles.push_back(Article{"T", {Paragraph{"The naïve cat.", {qa}}}});
  std::string bytes = write_dataset(d);
  EXPECT_NE(bytes.find("The na\xc3\xafve cat."), std::string::npos);
  EXPECT_EQ(bytes.find("\\u"), std::string::npos);
  EXPECT_EQ(read_dataset(bytes), d);
}

TEST(WriteDataset, CodePointOffsets) {
  // "é" is one code point but two bytes: "Zoé" starts at code point 5,
  // byte 6.
  QADataset d;
  QAEntry qa{"e1", "Who?", {{"Zoé", 5}}, {}};
  d.articles.push_back(Article{"T", {Paragraph{"Café Zoé", {qa}}}});
  EXPECT_TRUE(check_dataset(d).empty());
  d.articles[0].paragraphs[0].qas[0].answers[0].answer_start = 6;
  EXPECT_FALSE(check_dataset(d).empty());
}

TEST(FlattenAssemble, RoundTrip) {
  QADataset d = read_dataset(kMinimal);
  QAEntry second = d.articles[0].paragraphs[0].qas[0];
  second.id = "q2";
  d.articles[0].paragraphs[0].qas.push_back(second);
  d.articles.push_back(Article{"Other", {Paragraph{"x", {}}}});
  d.articles[1].paragraphs[0].qas.push_back(QAEntry{"q3", "X?", {{"x", 0}}, {}});
  std::vector<FlatPair> flat = flatten(d);
  ASSERT_EQ(flat.size(), 3u);
  EXPECT_EQ(flat[2].title, "Other");
  EXPECT_EQ(assemble(flat), d);
}

}  // namespace
}  // namespace synqa
