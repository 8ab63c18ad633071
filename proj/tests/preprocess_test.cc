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

#include "isaowl/preprocess.h"

#include <gtest/gtest.h>

#include <random>

#include "isaowl/error.h"
#include "support.h"

namespace isaowl {
namespace {

const Lexicon &Lex() {
  static const Lexicon lex = LoadLexiconDir(testing::DataPath("lexicon"));
  return lex;
}

TEST(ParseTaggedTest, SimpleSentenceHasFourTokens) {
  TaggedSentence s = ParseTagged("John_NNP is_VBZ a_DT student_NN");
  ASSERT_EQ(s.tokens.size(), 4u);
  EXPECT_EQ(s.tokens[0].lexeme, "John");
  EXPECT_EQ(s.tokens[0].tag, "NNP");
  EXPECT_EQ(s.tokens[3].tag, "NN");
}

TEST(ParseTaggedTest, SingleToken) {
  EXPECT_EQ(ParseTagged("a_DT").tokens.size(), 1u);
}

TEST(ParseTaggedTest, TagIsTakenVerbatim) {
  TaggedSentence s = ParseTagged("three_CD wheeled_JJ vehicle_NN");
  EXPECT_EQ(s.tokens[1].tag, "JJ");
}

TEST(ParseTaggedTest, SplitsAtLastUnderscore) {
  TaggedSentence s = ParseTagged("snake_case_NN");
  EXPECT_EQ(s.tokens[0].lexeme, "snake_case");
  EXPECT_EQ(s.tokens[0].tag, "NN");
}

TEST(ParseTaggedTest, MissingTagIsAnError) {
  try {
    ParseTagged("John_NNP is a_DT");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingTag);
  }
}

TEST(PreprocessTest, PluralSubjectIsSingularizedWithFlag) {
  TaggedSentence s = Preprocess(ParseTagged("The_DT men_NNS are_VBP hardworking_JJ"), Lex());
  EXPECT_EQ(s.Text(), "The man is hardworking");
  EXPECT_TRUE(s.tokens[1].flags.plural);
  EXPECT_EQ(s.tokens[1].tag, "NN");
}

TEST(PreprocessTest, SingularSentenceIsUnchanged) {
  TaggedSentence in = ParseTagged("John_NNP is_VBZ a_DT student_NN");
  EXPECT_EQ(Singularize(in, Lex()), in);
}

// Regular and irregular plurals checked against a hand-written table.
TEST(PreprocessTest, SingularFormMatchesReferenceTable) {
  const std::vector<std::pair<std::string, std::string>> table = {
      {"students", "student"}, {"cats", "cat"},           {"dogs", "dog"},
      {"houses", "house"},     {"boats", "boat"},         {"cities", "city"},
      {"countries", "country"}, {"companies", "company"}, {"boxes", "box"},
      {"churches", "church"},  {"brushes", "brush"},      {"classes", "class"},
      {"buses", "bus"},        {"men", "man"},            {"women", "woman"},
      {"children", "child"},   {"people", "person"},      {"feet", "foot"},
      {"teeth", "tooth"},      {"mice", "mouse"},         {"geese", "goose"},
      {"knives", "knife"},     {"wolves", "wolf"},        {"leaves", "leaf"},
      {"potatoes", "potato"},  {"heroes", "hero"},        {"analyses", "analysis"},
      {"criteria", "criterion"}, {"phenomena", "phenomenon"}, {"cacti", "cactus"},
      {"sheep", "sheep"},      {"deer", "deer"},          {"species", "species"},
      {"movies", "movie"},     {"cookies", "cookie"},     {"candidates", "candidate"},
      {"musicians", "musician"}, {"opiates", "opiate"},   {"opioids", "opioid"},
      {"keyboards", "keyboard"}, {"printers", "printer"}, {"scanners", "scanner"},
      {"drives", "drive"},     {"years", "year"},         {"members", "member"},
      {"analgesics", "analgesic"}, {"medicines", "medicine"}, {"peripherals", "peripheral"},
      {"vehicles", "vehicle"}, {"Students", "Student"},
  };
  ASSERT_EQ(table.size(), 50u);
  for (const auto &[plural, singular] : table) {
    EXPECT_EQ(SingularForm(plural, Lex()), singular) << plural;
  }
  EXPECT_FALSE(SingularForm("status", Lex()).has_value());
}

TEST(PreprocessTest, NumberWordsCollapseToOneToken) {
  TaggedSentence s = NormalizeLexical(
      ParseTagged("one_CD hundred_CD and_CC thirty_CD seven_CD cats_NNS"), Lex());
  ASSERT_EQ(s.tokens.size(), 2u);
  EXPECT_EQ(s.tokens[0].lexeme, "137");
  EXPECT_EQ(s.tokens[0].tag, "CD");
  EXPECT_EQ(s.tokens[0].flags.numeral, 137);
}

TEST(PreprocessTest, NumeralFlagIffDigitsOrNumberWords) {
  TaggedSentence s = Preprocess(ParseTagged("At_IN least_JJS 12_CD of_IN the_DT B2_NN"), Lex());
  for (const Token &t : s.tokens) {
    bool digits = !t.lexeme.empty() &&
                  std::all_of(t.lexeme.begin(), t.lexeme.end(), [](char c) { return c >= '0' && c <= '9'; });
    EXPECT_EQ(t.flags.numeral.has_value(), digits) << t.lexeme;
  }
}

TEST(PreprocessTest, CanonicalIsaIsAFixedPoint) {
  TaggedSentence s = NormalizeLexical(ParseTagged("cat_NN is_VBZ animal_NN"), Lex());
  EXPECT_EQ(s.TaggedText(), "cat_NN is_VBZ animal_NN");
}

TEST(PreprocessTest, KindOfBecomesIs) {
  TaggedSentence s =
      NormalizeLexical(ParseTagged("Cat_NN is_VBZ a_DT kind_NN of_IN animal_NN"), Lex());
  EXPECT_EQ(s.TaggedText(), "Cat_NN is_VBZ animal_NN");
}

TEST(PreprocessTest, UnitAndDimensionAdjectiveFlags) {
  TaggedSentence s =
      Preprocess(ParseTagged("John_NNP is_VBZ five_CD feet_NNS tall_JJ"), Lex());
  ASSERT_EQ(s.tokens.size(), 5u);
  EXPECT_EQ(s.tokens[3].flags.unit, Dimension::kHeight);
  ASSERT_TRUE(s.tokens[4].flags.dim_adj.has_value());
  EXPECT_EQ(s.tokens[4].flags.dim_adj->first, Dimension::kHeight);
  EXPECT_EQ(s.tokens[4].flags.dim_adj->second, Sense::kMax);
}

TEST(PreprocessTest, NoUnitMeansNoChange) {
  TaggedSentence in = ParseTagged("John_NNP is_VBZ a_DT student_NN");
  EXPECT_EQ(AnnotateSpecial(in, Lex()), in);
}

TEST(PreprocessTest, TerminalPunctuationIsDropped) {
  TaggedSentence s = StripTerminalPunctuation(ParseTagged("Cat_NN is_VBZ animal_NN ._."));
  EXPECT_EQ(s.tokens.size(), 3u);
}

// Properties over the synthetic corpus.
class PreprocessPropertyTest : public ::testing::Test {
 protected:
  std::vector<TaggedSentence> Corpus() {
    std::vector<TaggedSentence> out;
    int line = 0;
    for (const std::string &l : testing::GenerateCorpus(11, 300, true)) {
      out.push_back(ParseTagged(l, SourceId{"gen", ++line}));
    }
    return out;
  }
};

TEST_F(PreprocessPropertyTest, NormalizeAndAnnotateAreIdempotent) {
  for (const TaggedSentence &s : Corpus()) {
    TaggedSentence once = NormalizeLexical(s, Lex());
    EXPECT_EQ(NormalizeLexical(once, Lex()), once) << s.TaggedText();
    TaggedSentence ann = AnnotateSpecial(once, Lex());
    EXPECT_EQ(AnnotateSpecial(ann, Lex()), ann) << s.TaggedText();
  }
}

TEST_F(PreprocessPropertyTest, SingularizePreservesTokenCount) {
  for (const TaggedSentence &s : Corpus()) {
    EXPECT_EQ(Singularize(s, Lex()).tokens.size(), s.tokens.size());
  }
}

TEST_F(PreprocessPropertyTest, TokenCountNeverGrowsAndSourceIsKept) {
  for (const TaggedSentence &s : Corpus()) {
    TaggedSentence p = Preprocess(s, Lex());
    EXPECT_LE(p.tokens.size(), s.tokens.size()) << s.TaggedText();
    EXPECT_EQ(p.source, s.source);
  }
}

TEST(TagRawTest, KnownWordsAndProperNouns) {
  TaggedSentence s = TagRaw("John is a student.", Lex());
  EXPECT_EQ(s.TaggedText(), "John_NNP is_VBZ a_DT student_NN ._.");
}

}  // namespace
}  // namespace isaowl
