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

#include "isaowl/nss.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "isaowl/preprocess.h"
#include "isaowl/simplify.h"
#include "isaowl/text.h"
#include "support.h"

namespace isaowl {
namespace {

const Lexicon &Lex() {
  static const Lexicon lex = LoadLexiconDir(testing::DataPath("lexicon"));
  return lex;
}

std::vector<TaggedSentence> Prepare(const std::string &tagged) {
  return Simplify(Preprocess(ParseTagged(tagged), Lex()), DefaultRules(), Lex());
}

FitOutcome FitOne(const std::string &tagged) {
  std::vector<TaggedSentence> s = Prepare(tagged);
  EXPECT_EQ(s.size(), 1u) << tagged;
  return FitTemplate(s.at(0), Lex());
}

std::vector<std::string> Words(const std::vector<Token> &ts) {
  std::vector<std::string> out;
  for (const Token &t : ts) out.push_back(t.lexeme);
  return out;
}

// Test-owned allowed-tag tables; kept separate from the library's own check.
const std::set<std::string> kQuantTags = {"DT", "PDT", "IN", "JJS", "JJ", "RB", "CD"};
const std::set<std::string> kModTags = {"NN", "JJ", "CD", "RB", "VBG"};
const std::set<std::string> kHeadTags = {"NN", "NNP", "JJ", "RB", "VBG"};
const std::set<std::string> kSepTags = {",", "CC", "DT"};
const std::set<std::string> kClauseWords = {"which", "who", "whose", "whom", "that"};

bool OracleTokenOk(const std::set<std::string> &allowed, const Token &t) {
  return allowed.count(t.tag) > 0;
}

bool OraclePhraseOk(const Phrase &p) {
  if (p.quantifier) {
    for (const Token &t : p.quantifier->tokens) {
      if (!OracleTokenOk(kQuantTags, t)) return false;
    }
  }
  for (const auto &sep : p.list.separators) {
    for (const Token &t : sep) {
      if (!OracleTokenOk(kSepTags, t)) return false;
    }
  }
  for (const Entity &e : p.list.entities) {
    if (e.head.empty()) return false;
    for (const Token &t : e.modifiers) {
      if (!OracleTokenOk(kModTags, t)) return false;
    }
    for (const Token &t : e.head) {
      if (!OracleTokenOk(kHeadTags, t)) return false;
    }
  }
  return true;
}

bool OracleIsaOk(const IsaCell &c) {
  if (c.tokens.empty()) return false;
  const std::string &first = c.tokens[0].tag;
  return first.starts_with("VB") || first == "MD";
}

bool OracleClauseOk(const ClauseCell &c) {
  for (const Token &t : c.tokens) {
    if (t.tag != "," && kClauseWords.count(ToLower(t.lexeme)) == 0) return false;
  }
  return true;
}

// Mechanical correctness judgement for one fitted instance.
bool OracleCorrect(const NssInstance &n) {
  if (n.subject.list.empty() || n.object1.list.empty()) return false;
  if (!OraclePhraseOk(n.subject) || !OraclePhraseOk(n.object1) || !OraclePhraseOk(n.object2)) {
    return false;
  }
  if (!OracleIsaOk(n.isa1) || !OracleClauseOk(n.cl1) || !OracleClauseOk(n.cl2)) return false;
  if (n.isa2.has_value() != !n.object2.list.empty()) return false;
  if (n.isa2 && !OracleIsaOk(*n.isa2)) return false;
  if (n.cl1.kind != ClauseKind::kNone && n.cl2.kind != ClauseKind::kNone) return false;
  return true;
}

TEST(FitTemplateTest, DogIsVeryClever) {
  FitOutcome o = FitOne("The_DT dog_NN is_VBZ very_RB clever_JJ");
  ASSERT_TRUE(o.ok());
  const NssInstance &n = o.instance();
  EXPECT_EQ(n.kind, NssKind::kSimple);
  ASSERT_TRUE(n.q1().has_value());
  EXPECT_EQ(Words(n.q1()->tokens), (std::vector<std::string>{"The"}));
  ASSERT_EQ(n.subject.list.entities.size(), 1u);
  EXPECT_EQ(n.subject.list.entities[0].HeadWords(), (std::vector<std::string>{"dog"}));
  EXPECT_EQ(Words(n.isa1.tokens), (std::vector<std::string>{"is"}));
  ASSERT_EQ(n.object1.list.entities.size(), 1u);
  EXPECT_EQ(Words(n.object1.list.entities[0].modifiers), (std::vector<std::string>{"very"}));
  EXPECT_EQ(n.object1.list.entities[0].HeadWords(), (std::vector<std::string>{"clever"}));
}

TEST(FitTemplateTest, BeingClauseIsComplex) {
  FitOutcome o = FitOne(
      "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ");
  ASSERT_TRUE(o.ok());
  const NssInstance &n = o.instance();
  EXPECT_EQ(n.kind, NssKind::kComplex);
  EXPECT_EQ(n.cl1.kind, ClauseKind::kNull);
  EXPECT_EQ(Words(n.isa1.tokens), (std::vector<std::string>{"being"}));
  EXPECT_EQ(n.object1.list.entities.at(0).HeadWords(), (std::vector<std::string>{"student"}));
  EXPECT_EQ(Words(n.object1.list.entities.at(0).modifiers),
            (std::vector<std::string>{"hard-working"}));
  ASSERT_TRUE(n.isa2.has_value());
  EXPECT_EQ(n.object2.list.entities.at(0).HeadWords(), (std::vector<std::string>{"successful"}));
}

TEST(FitTemplateTest, ProperNounSubject) {
  FitOutcome o = FitOne("John_NNP is_VBZ a_DT student_NN");
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(o.instance().kind, NssKind::kSimple);
  EXPECT_TRUE(o.instance().subject.list.entities.at(0).IsProperNoun());
  EXPECT_EQ(o.instance().object1.list.entities.at(0).HeadWords(),
            (std::vector<std::string>{"student"}));
}

TEST(FitTemplateTest, MultiTokenProperNameIsOneEntity) {
  FitOutcome o = FitOne("King_NNP Richard_NNP was_VBD an_DT English_JJ ruler_NN");
  ASSERT_TRUE(o.ok());
  ASSERT_EQ(o.instance().subject.list.entities.size(), 1u);
  EXPECT_EQ(o.instance().subject.list.entities[0].HeadWords(),
            (std::vector<std::string>{"King", "Richard"}));
}

TEST(FitTemplateTest, MissingIsaLexemeFails) {
  FitOutcome o = FitTemplate(Preprocess(ParseTagged("the_DT big_JJ dog_NN"), Lex()), Lex());
  ASSERT_FALSE(o.ok());
  EXPECT_EQ(o.failure().reason, FitFailureReason::kNoIsaLexeme);
}

TEST(FitTemplateTest, DisallowedTagReportsPosition) {
  FitOutcome o =
      FitTemplate(Preprocess(ParseTagged("John_NNP is_VBZ a_DT student_NN from_IN Paris_NNP"), Lex()),
                  Lex());
  ASSERT_FALSE(o.ok());
  EXPECT_EQ(o.failure().reason, FitFailureReason::kCellTagMismatch);
  EXPECT_EQ(o.failure().position, 4u);
  EXPECT_EQ(o.failure().tag, "IN");
}

TEST(FitTemplateTest, IsaSpanIsLongestMatch) {
  FitOutcome o = FitOne("Tangerine_NN is_VBZ like_IN an_DT orange_NN");
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(Words(o.instance().isa1.tokens), (std::vector<std::string>{"is", "like"}));
  EXPECT_EQ(o.instance().isa1.kind, IsaKind::kSimilarity);
}

TEST(FitTemplateTest, JsonRoundTrip) {
  FitOutcome o = FitOne(
      "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ");
  FitOutcome back = FitOutcomeFromJson(FitOutcomeToJson(o));
  EXPECT_EQ(FitOutcomeToJson(back), FitOutcomeToJson(o));
  EXPECT_EQ(Reconstruct(back.instance()), Reconstruct(o.instance()));
}

TEST(DecomposeTest, SubjectClauseGivesTwoReadingsAboutTheSubject) {
  FitOutcome o = FitOne(
      "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ");
  std::vector<NssInstance> parts = DecomposeComplex(o.instance());
  ASSERT_EQ(parts.size(), 2u);
  for (const NssInstance &p : parts) {
    EXPECT_EQ(p.subject.list.entities.at(0).HeadWords(), (std::vector<std::string>{"John"}));
    EXPECT_FALSE(p.isa2.has_value());
  }
  EXPECT_EQ(parts[1].object1.list.entities.at(0).HeadWords(),
            (std::vector<std::string>{"successful"}));
}

// Fitted instances from the golden inputs plus 100 generated variations.
std::vector<std::pair<TaggedSentence, FitOutcome>> BundledFits() {
  std::vector<std::string> lines;
  for (const testing::GoldenCase &c : testing::LoadGoldenInputs()) {
    for (const std::string &l : c.lines) lines.push_back(l);
  }
  for (const std::string &l : testing::GenerateCorpus(2024, 100, true)) lines.push_back(l);
  std::vector<std::pair<TaggedSentence, FitOutcome>> out;
  for (const std::string &l : lines) {
    for (const TaggedSentence &s : Prepare(l)) out.emplace_back(s, FitTemplate(s, Lex()));
  }
  return out;
}

TEST(NssPropertyTest, BundledCorpusFitsAndPrecisionIsOne) {
  std::vector<std::pair<TaggedSentence, FitOutcome>> fits = BundledFits();
  ASSERT_GT(fits.size(), 120u);
  std::vector<FitOutcome> outcomes;
  std::vector<bool> gold;
  int64_t fitted = 0, correct = 0;
  for (const auto &[s, o] : fits) {
    outcomes.push_back(o);
    bool ok = o.ok() && OracleCorrect(o.instance());
    gold.push_back(ok);
    if (o.ok()) {
      ++fitted;
      if (ok) ++correct;
      EXPECT_FALSE(CheckCellTags(o.instance()).has_value()) << s.TaggedText();
    }
    EXPECT_TRUE(o.ok()) << s.TaggedText();
  }
  CharacterizationCounts counts = CountOutcomes(outcomes, &gold);
  EXPECT_EQ(counts.n, static_cast<int64_t>(fits.size()));
  EXPECT_EQ(counts.n_fitted, fitted);
  EXPECT_EQ(counts.n_correct, correct);
  CharacterizationScores scores = ComputeCharacterization(counts);
  ASSERT_TRUE(scores.cp.has_value());
  EXPECT_EQ(*scores.cp, Rational(1));
}

TEST(NssPropertyTest, ReconstructionReproducesInput) {
  for (const auto &[s, o] : BundledFits()) {
    if (!o.ok()) continue;
    EXPECT_EQ(Reconstruct(o.instance()), s.tokens) << s.TaggedText();
  }
}

TEST(NssPropertyTest, IsaTokensAppearInNoOtherCell) {
  for (const auto &[s, o] : BundledFits()) {
    if (!o.ok()) continue;
    const NssInstance &n = o.instance();
    std::vector<Token> all = Reconstruct(n);
    size_t isa_tokens = n.isa1.tokens.size() + (n.isa2 ? n.isa2->tokens.size() : 0);
    // Reconstruction is exact, so the IS-A span tokens are counted once.
    size_t others = 0;
    auto count_phrase = [&](const Phrase &p) {
      if (p.quantifier) others += p.quantifier->tokens.size();
      for (const auto &sep : p.list.separators) others += sep.size();
      for (const Entity &e : p.list.entities) others += e.modifiers.size() + e.head.size();
    };
    count_phrase(n.subject);
    count_phrase(n.object1);
    count_phrase(n.object2);
    others += n.cl1.tokens.size() + n.cl2.tokens.size();
    if (n.temporal) others += n.temporal->tokens.size();
    EXPECT_EQ(isa_tokens + others, all.size()) << s.TaggedText();
  }
}

TEST(NssPropertyTest, CellTagCheckAgreesWithOracleOnPerturbedInstances) {
  std::mt19937_64 rng(99);
  const std::vector<std::string> bad_tags = {"IN", "PRP", "WDT", "UH", "SYM"};
  for (const auto &[s, o] : BundledFits()) {
    if (!o.ok()) continue;
    NssInstance n = o.instance();
    Entity &e = n.object1.list.entities.at(0);
    e.head.back().tag = bad_tags[rng() % bad_tags.size()];
    EXPECT_FALSE(OracleCorrect(n));
    EXPECT_TRUE(CheckCellTags(n).has_value()) << s.TaggedText();
  }
}

TEST(CharacterizationTest, CorpusTotals) {
  CharacterizationScores s = ComputeCharacterization({1537, 1528, 1528});
  EXPECT_EQ(s.cp->ToDecimal(), "1.0000");
  EXPECT_EQ(s.cr->ToDecimal(), "0.9941");
  EXPECT_EQ(*s.cr, Rational(1528, 1537));
}

TEST(CharacterizationTest, SmallerRows) {
  EXPECT_EQ(ComputeCharacterization({172, 163, 163}).cr->ToDecimal(), "0.9477");
  EXPECT_EQ(ComputeCharacterization({150, 147, 147}).cr->ToDecimal(2), "0.98");
}

TEST(CharacterizationTest, AllCorrectIsOne) {
  CharacterizationScores s = ComputeCharacterization({40, 40, 40});
  EXPECT_EQ(*s.cp, Rational(1));
  EXPECT_EQ(*s.cr, Rational(1));
}

TEST(CharacterizationTest, ZeroDenominatorsAreUndefined) {
  CharacterizationScores s = ComputeCharacterization({0, 0, 0});
  EXPECT_FALSE(s.cp.has_value());
  EXPECT_FALSE(s.cr.has_value());
  CharacterizationScores t = ComputeCharacterization({5, 0, 0});
  EXPECT_FALSE(t.cp.has_value());
  EXPECT_EQ(*t.cr, Rational(0));
}

TEST(CharacterizationTest, GoldFlagsLowerCorrectCount) {
  std::vector<FitOutcome> outcomes = {FitOne("John_NNP is_VBZ a_DT student_NN"),
                                      FitOne("Cat_NN is_VBZ animal_NN")};
  std::vector<bool> gold = {true, false};
  CharacterizationCounts c = CountOutcomes(outcomes, &gold);
  EXPECT_EQ(c.n, 2);
  EXPECT_EQ(c.n_fitted, 2);
  EXPECT_EQ(c.n_correct, 1);
  EXPECT_EQ(*ComputeCharacterization(c).cp, Rational(1, 2));
}

}  // namespace
}  // namespace isaowl
