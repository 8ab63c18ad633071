// Copyright 2026 The isaowl Authors.
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

// Runs the isaowl binary through the shell and inspects its files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <random>

#include "isaowl/text.h"
#include "json.hpp"
#include "support.h"

namespace isaowl {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("isaowl_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  // Exit status of `isaowl <args>` run through /bin/sh.
  int Run(const std::string &args) const {
    std::string cmd = std::string(ISAOWL_CLI_PATH) + " " + args + " 2>" + Path("stderr.txt");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string Stderr() const { return ReadFile(Path("stderr.txt")); }

  std::string WriteCorpus(const std::string &name, const std::vector<std::string> &lines) const {
    std::string text;
    for (const std::string &l : lines) text += l + "\n";
    WriteFile(Path(name), text);
    return Path(name);
  }

  fs::path dir_;
};

std::string Fixture(const std::string &name) {
  return std::string(ISAOWL_TEST_DATA_DIR) + "/fixtures/" + name;
}

TEST_F(CliTest, StagedCommandsMatchLearnByteForByte) {
  std::string corpus = WriteCorpus("c.txt", testing::GenerateCorpus(12, 200, false));
  ASSERT_EQ(Run("learn -i " + corpus + " --owl " + Path("learn.owl") + " --taxonomy " +
                Path("learn.tsv") + " --nss " + Path("learn.nss")),
            0)
      << Stderr();
  ASSERT_EQ(Run("simplify -i " + corpus + " -o " + Path("s.jsonl")), 0) << Stderr();
  ASSERT_EQ(Run("fit -i " + Path("s.jsonl") + " -o " + Path("f.jsonl")), 0) << Stderr();
  ASSERT_EQ(Run("translate -i " + Path("f.jsonl") + " -o " + Path("t.owl")), 0) << Stderr();
  ASSERT_EQ(Run("classify -i " + Path("t.owl") + " -o " + Path("t.tsv")), 0) << Stderr();
  EXPECT_EQ(ReadFile(Path("t.owl")), ReadFile(Path("learn.owl")));
  EXPECT_EQ(ReadFile(Path("t.tsv")), ReadFile(Path("learn.tsv")));
  EXPECT_EQ(ReadFile(Path("f.jsonl")), ReadFile(Path("learn.nss")));
}

TEST_F(CliTest, PipedStagesMatchLearn) {
  std::string corpus = WriteCorpus("c.txt", testing::GenerateCorpus(13, 50, false));
  ASSERT_EQ(Run("learn -i " + corpus + " --owl " + Path("learn.owl")), 0) << Stderr();
  std::string bin(ISAOWL_CLI_PATH);
  std::string cmd = bin + " simplify -i " + corpus + " | " + bin + " fit | " + bin +
                    " translate > " + Path("piped.owl");
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(ReadFile(Path("piped.owl")), ReadFile(Path("learn.owl")));
}

TEST_F(CliTest, ParallelJobsProduceIdenticalOutput) {
  std::string corpus = WriteCorpus("c.txt", testing::GenerateCorpus(14, 300, false));
  ASSERT_EQ(Run("learn -i " + corpus + " -j 1 --owl " + Path("a.owl")), 0) << Stderr();
  ASSERT_EQ(Run("learn -i " + corpus + " -j 4 --owl " + Path("b.owl")), 0) << Stderr();
  EXPECT_EQ(ReadFile(Path("a.owl")), ReadFile(Path("b.owl")));
}

TEST_F(CliTest, EmptyCorpusExitsCleanlyWithZeroCounts) {
  WriteFile(Path("empty.txt"), "");
  ASSERT_EQ(Run("learn -i " + Path("empty.txt") + " --owl " + Path("e.owl") + " --manifest " +
                Path("m.json")),
            0)
      << Stderr();
  nlohmann::json m = nlohmann::json::parse(ReadFile(Path("m.json")));
  EXPECT_EQ(m["characterization"]["n"], 0);
  EXPECT_EQ(m["characterization"]["n_fitted"], 0);
  EXPECT_EQ(m["axioms"], 0);
  EXPECT_NE(ReadFile(Path("e.owl")).find("Ontology("), std::string::npos);
}

TEST_F(CliTest, ManifestCountsAreOrdered) {
  std::vector<std::string> lines = testing::GenerateCorpus(15, 100, false);
  lines.push_back("the_DT big_JJ dog_NN");
  std::string corpus = WriteCorpus("c.txt", lines);
  ASSERT_EQ(Run("learn -i " + corpus + " --owl " + Path("o.owl") + " --manifest " + Path("m.json")),
            0);
  nlohmann::json c = nlohmann::json::parse(ReadFile(Path("m.json")))["characterization"];
  EXPECT_LE(c["n_correct"].get<int>(), c["n_fitted"].get<int>());
  EXPECT_LE(c["n_fitted"].get<int>(), c["n"].get<int>());
  EXPECT_EQ(c["n_fitted"].get<int>(), c["n"].get<int>() - 1);
}

TEST_F(CliTest, StrictModeFailsOnWarnings) {
  std::string corpus =
      WriteCorpus("c.txt", {"At_IN least_JJS 0_CD students_NNS are_VBP hard-working_JJ"});
  EXPECT_EQ(Run("learn -i " + corpus + " --owl " + Path("o.owl")), 0);
  EXPECT_EQ(Run("learn --strict -i " + corpus + " --owl " + Path("o.owl")), 2);
}

TEST_F(CliTest, EvalReportsToyTaxonomiesScores) {
  ASSERT_EQ(Run("eval --include-top --learned " + Fixture("toy_missing_edge_learned.tsv") +
                " --gold " + Fixture("toy_missing_edge_gold.tsv") + " --report " + Path("r.json")),
            0)
      << Stderr();
  nlohmann::json r = nlohmann::json::parse(ReadFile(Path("r.json")));
  EXPECT_EQ(r["iim_p"]["exact"], "1");
  EXPECT_EQ(r["iim_r"]["exact"], "8/9");
}

TEST_F(CliTest, ErrorsExitWithStatusOne) {
  EXPECT_NE(Run("eval --learned /nonexistent.tsv --gold /nonexistent.tsv"), 0);
  WriteFile(Path("bad.owl"), "not an ontology\n");
  EXPECT_EQ(Run("classify -i " + Path("bad.owl")), 1);
  EXPECT_NE(Stderr().find("error: ParseError"), std::string::npos) << Stderr();
  WriteFile(Path("c.txt"), "Cat_NN is_VBZ animal_NN\n");
  EXPECT_NE(Run("learn -i " + Path("c.txt") + " --clock yesterday"), 0);
  EXPECT_NE(Run("bogus"), 0);
}

TEST_F(CliTest, RawInputIsTagged) {
  WriteFile(Path("raw.txt"), "Wild cat is a mammal.\n");
  ASSERT_EQ(Run("learn --raw -i " + Path("raw.txt") + " --owl " + Path("o.owl")), 0) << Stderr();
  EXPECT_NE(ReadFile(Path("o.owl")).find("SubClassOf(Annotation"), std::string::npos);
  EXPECT_NE(ReadFile(Path("o.owl")).find(":WildCat :Mammal)"), std::string::npos);
}

}  // namespace
}  // namespace isaowl
