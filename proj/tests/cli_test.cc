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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "synqa/cli.h"
#include "synqa/dataset.h"
#include "synqa/lexicon.h"
#include "synqa/mixer.h"
#include "test_util.h"

namespace synqa {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("synqa_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string &name) const { return (dir_ / name).string(); }
  std::string write(const std::string &name, const std::string &content) {
    std::ofstream(dir_ / name) << content;
    return path(name);
  }

  static std::string golden(const std::string &name) {
    return (testing::test_data() / "golden" / name).string();
  }

  // Generates the golden synthetic dataset into the temp dir.
  std::string generate_golden() {
    CliRun r = run({"generate", "--corpus", golden("corpus.txt"), "--gazetteers",
                 golden("gazetteers"), "--out", path("syn.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    return path("syn.json");
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"generate", "--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, GenerateGolden) {
  CliRun r = run({"generate", "--corpus", golden("corpus.txt"), "--gazetteers",
               golden("gazetteers"), "--out", path("syn.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(read_file(path("syn.json")), read_file(golden("expected.json")));
  EXPECT_EQ(r.err,
            "generate: documents=10 sentences=20 facts=16 emitted=50 filtered=0\n");
}

TEST_F(CliTest, GenerateWorkersFlag) {
  CliRun r = run({"generate", "--corpus", golden("corpus.txt"), "--gazetteers",
               golden("gazetteers"), "--out", path("syn.json"), "--workers", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(read_file(path("syn.json")), read_file(golden("expected.json")));
}

TEST_F(CliTest, GenerateMissingCorpusIsUsage) {
  CliRun r = run({"generate", "--out", path("x.json")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--corpus"), std::string::npos);
  EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenerateUnreadableCorpus) {
  EXPECT_EQ(run({"generate", "--corpus", path("absent.txt"), "--out", path("x.json")}).code,
            kExitIo);
}

TEST_F(CliTest, GenerateEmptyDocuments) {
  std::string corpus = write("empty.txt", "\n---\n\n---\n");
  CliRun r = run({"generate", "--corpus", corpus, "--out", path("x.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(read_dataset(read_file(path("x.json"))).pair_count(), 0u);
}

TEST_F(CliTest, GenerateInvalidTemplates) {
  std::string tpl = write("bad.tpl", "broken line\n");
  CliRun r = run({"generate", "--corpus", golden("corpus.txt"), "--templates", tpl, "--out",
               path("x.json")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenerateBadFlagValue) {
  EXPECT_EQ(run({"generate", "--corpus", golden("corpus.txt"), "--out", path("x.json"),
                 "--min-score", "2"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"generate", "--corpus", golden("corpus.txt"), "--out", path("x.json"),
                 "--max-per-sentence", "zero"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, FlagOverridesConfigOverridesDefault) {
  std::string cfg = write("run.cfg", "min_score = 0.9\nmax_pairs_per_sentence = 2\n");
  CliRun file_only = run({"generate", "--config", cfg, "--corpus", golden("corpus.txt"),
                       "--out", path("a.json"), "--echo-config"});
  ASSERT_EQ(file_only.code, kExitOk) << file_only.err;
  EXPECT_NE(file_only.out.find("min_score = 0.9\n"), std::string::npos) << file_only.out;
  EXPECT_NE(file_only.out.find("max_pairs_per_sentence = 2\n"), std::string::npos);
  EXPECT_NE(file_only.out.find("seed = 42  # default\n"), std::string::npos);

  CliRun flagged = run({"generate", "--config", cfg, "--corpus", golden("corpus.txt"),
                     "--out", path("b.json"), "--min-score", "0.6", "--echo-config"});
  ASSERT_EQ(flagged.code, kExitOk) << flagged.err;
  EXPECT_NE(flagged.out.find("min_score = 0.6\n"), std::string::npos) << flagged.out;
  EXPECT_NE(flagged.out.find("max_pairs_per_sentence = 2\n"), std::string::npos);
}

TEST_F(CliTest, ConfigErrorsAreUsageErrors) {
  std::string cfg = write("bad.cfg", "ratio = -1\n");
  CliRun r = run({"generate", "--config", cfg, "--corpus", golden("corpus.txt"), "--out",
               path("x.json")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("ratio"), std::string::npos);
  EXPECT_EQ(run({"generate", "--config", path("absent.cfg"), "--corpus",
                 golden("corpus.txt"), "--out", path("x.json")})
                .code,
            kExitIo);
}

TEST_F(CliTest, MixGoldenThirtyPercent) {
  std::string syn = generate_golden();
  CliRun r = run({"mix", "--real", golden("real.json"), "--synthetic", syn, "--ratio", "0.3",
               "--out", path("mixed.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.err, "mix: real=20 synthetic=6 total=26 realized_ratio=0.300000\n");

  // Hand count of the six top-scoring golden pairs: two WHO, four WHERE.
  CliRun s = run({"stats", path("mixed.json"), "--format", "tsv"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_NE(s.out.find("total\t26\n"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("realized_ratio\t0.300000\n"), std::string::npos);
  EXPECT_NE(s.out.find("wh_type.WHO\t2\n"), std::string::npos);
  EXPECT_NE(s.out.find("wh_type.WHERE\t4\n"), std::string::npos);
  EXPECT_NE(s.out.find("wh_type.WHAT\t0\n"), std::string::npos);
  EXPECT_NE(s.out.find("wh_type.WHEN\t0\n"), std::string::npos);

  // Same seed, same bytes.
  ASSERT_EQ(run({"mix", "--real", golden("real.json"), "--synthetic", syn, "--ratio", "0.3",
                 "--out", path("again.json")})
                .code,
            kExitOk);
  EXPECT_EQ(read_file(path("again.json")), read_file(path("mixed.json")));
}

TEST_F(CliTest, MixRatioZeroKeepsReal) {
  std::string syn = generate_golden();
  ASSERT_EQ(run({"mix", "--real", golden("real.json"), "--synthetic", syn, "--ratio", "0",
                 "--out", path("mixed.json")})
                .code,
            kExitOk);
  QADataset mixed = read_dataset(read_file(path("mixed.json")));
  QADataset real = read_dataset(read_file(golden("real.json")));
  auto keyed = [](const QADataset &d) {
    std::vector<std::string> keys;
    for (const FlatPair &f : flatten(d)) {
      keys.push_back(f.qa.id + "|" + f.qa.question + "|" + f.context + "|" +
                     f.qa.answers.at(0).text);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  EXPECT_EQ(keyed(mixed), keyed(real));
}

TEST_F(CliTest, MixShortPool) {
  std::string syn = generate_golden();
  // 20 real at ratio 5 needs 100 synthetic; the pool has 50.
  CliRun r = run({"mix", "--real", golden("real.json"), "--synthetic", syn, "--ratio", "5",
               "--out", path("mixed.json")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("need 100, have 50"), std::string::npos) << r.err;
  CliRun shorted = run({"mix", "--real", golden("real.json"), "--synthetic", syn, "--ratio", "5",
                     "--allow-short", "--out", path("mixed.json")});
  EXPECT_EQ(shorted.code, kExitOk);
  EXPECT_NE(shorted.err.find("realized_ratio=2.500000"), std::string::npos) << shorted.err;
}

TEST_F(CliTest, MixInvalidDataset) {
  std::string bad = write("bad.json", "{\"version\": \"synqa-1.0\", \"data\": 3}");
  EXPECT_EQ(run({"mix", "--real", bad, "--synthetic", golden("expected.json"), "--out",
                 path("m.json")})
                .code,
            kExitValidation);
}

TEST_F(CliTest, StatsEmptyAndUnreadable) {
  std::string empty = write("empty.json", "{\"version\": \"synqa-1.0\", \"data\": []}");
  CliRun r = run({"stats", empty});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    std::string value = line.substr(line.find_last_of(' ') + 1);
    EXPECT_TRUE(value == "0" || value == "0.000000") << line;
  }
  EXPECT_EQ(run({"stats", path("absent.json")}).code, kExitIo);
}

TEST_F(CliTest, ValidateExamples) {
  CliRun ok = run({"validate", golden("expected.json")});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "ok: 50 pairs\n");

  std::string bytes = read_file(golden("expected.json"));
  std::size_t at = bytes.find("\"answer_start\": 0");
  ASSERT_NE(at, std::string::npos);
  bytes.replace(at, 17, "\"answer_start\": 1");
  CliRun bad = run({"validate", write("bad.json", bytes)});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_NE(bad.out.find("doc-0001-s0-paper.who-0"), std::string::npos) << bad.out;

  CliRun compat = run({"validate", golden("real.json")});
  EXPECT_EQ(compat.code, kExitOk);
  EXPECT_NE(compat.out.find("compatibility"), std::string::npos);
  EXPECT_NE(compat.out.find("ok: 20 pairs"), std::string::npos);

  EXPECT_EQ(run({"validate", path("absent.json")}).code, kExitIo);
}

}  // namespace
}  // namespace synqa
