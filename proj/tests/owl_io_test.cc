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

#include "isaowl/owl_io.h"

#include <gtest/gtest.h>

#include <random>

#include "isaowl/error.h"
#include "isaowl/text.h"
#include "support.h"

namespace isaowl {
namespace {

const char kHeader[] =
    "Prefix(:=<http://example.org/isaowl#>)\n"
    "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
    "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
    "Ontology(<http://example.org/isaowl>\n";

ErrorCode ParseCode(const std::string &text, std::string *message = nullptr) {
  try {
    ParseOwl(text);
  } catch (const Error &e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "parse unexpectedly succeeded";
  return ErrorCode::kIo;
}

TEST(OwlIoTest, EmptyKbIsHeaderOnly) {
  std::string doc = SerializeOwl(KnowledgeBase{});
  EXPECT_EQ(doc, std::string(kHeader) + ")\n");
  KnowledgeBase back = ParseOwl(doc);
  EXPECT_TRUE(back.empty());
}

TEST(OwlIoTest, SubclassAndNominal) {
  KnowledgeBase kb;
  kb.Add(Axiom::SubClassOf(Concept::Atom("WildCat"), Concept::Atom("Cat")));
  kb.Add(Axiom::ClassAssertion(Concept::Nominal("Priyansh"), "Priyansh"));
  std::string doc = SerializeOwl(kb);
  EXPECT_NE(doc.find("\nSubClassOf(:WildCat :Cat)\n"), std::string::npos);
  EXPECT_NE(doc.find("ObjectOneOf(:Priyansh)"), std::string::npos);
  EXPECT_NE(doc.find("Declaration(Class(:Cat))\nDeclaration(Class(:WildCat))\n"), std::string::npos);
  EXPECT_NE(doc.find("Declaration(NamedIndividual(:Priyansh))"), std::string::npos);
}

TEST(OwlIoTest, AnnotatedLiteralsSurvive) {
  KnowledgeBase kb;
  Axiom ax = Axiom::DataAssertion("hasName", "x1", {"a \"quoted\" \\ name", Datatype::kString});
  ax.Annotate("source", "doc with space:4");
  ax.Annotate("rule", "r\"1");
  kb.Add(ax);
  KnowledgeBase back = ParseOwl(SerializeOwl(kb));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back.axioms()[0], ax);
  EXPECT_EQ(back.axioms()[0].value.lexical, "a \"quoted\" \\ name");
}

TEST(OwlIoTest, MalformedAxiomReportsLine) {
  std::string msg;
  EXPECT_EQ(ParseCode(std::string(kHeader) + "SubClassOf(:A ObjectSomeValuesFrom(:r))\n)\n", &msg), ErrorCode::kParseError);
  EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
}

TEST(OwlIoTest, UnknownConstructIsAParseError) {
  EXPECT_EQ(ParseCode(std::string(kHeader) + "HasKey(:A () (:r))\n)\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(std::string(kHeader) + "SubClassOf(:A ObjectFoo(:B))\n)\n"),
            ErrorCode::kParseError);
}

TEST(OwlIoTest, MissingOntologyIsAParseError) {
  EXPECT_EQ(ParseCode("SubClassOf(:A :B)\n"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(std::string(kHeader)), ErrorCode::kParseError);
}

TEST(OwlIoTest, JsonListsAxiomsInOrder) {
  KnowledgeBase kb;
  kb.Add(Axiom::SubClassOf(Concept::Atom("WildCat"), Concept::Atom("Cat")));
  kb.Add(Axiom::ClassAssertion(Concept::Atom("Cat"), "tom"));
  nlohmann::json j = KbToJson(kb);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["owl"], "SubClassOf(:WildCat :Cat)");
  EXPECT_EQ(j[0]["dl"], "WildCat ⊑ Cat");
  EXPECT_EQ(j[1]["kind"], "ClassAssertion");
}

TEST(OwlIoPropertyTest, RandomKnowledgeBasesRoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    KnowledgeBase kb = testing::RandomKb(rng, 1 + static_cast<int>(rng() % 15), 4);
    std::string doc = SerializeOwl(kb);
    KnowledgeBase back = ParseOwl(doc);
    EXPECT_TRUE(back == kb) << doc;
    EXPECT_EQ(SerializeOwl(back), doc);
  }
}

TEST(OwlIoPropertyTest, EveryUsedSymbolIsDeclared) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    KnowledgeBase kb = testing::RandomKb(rng, 10, 3);
    std::string doc = SerializeOwl(kb);
    for (const std::string &c : kb.concepts()) {
      EXPECT_NE(doc.find("Declaration(Class(:" + c + "))"), std::string::npos) << c;
    }
    for (const std::string &r : kb.object_roles()) {
      EXPECT_NE(doc.find("Declaration(ObjectProperty(:" + r + "))"), std::string::npos) << r;
    }
    for (const std::string &r : kb.data_roles()) {
      EXPECT_NE(doc.find("Declaration(DataProperty(:" + r + "))"), std::string::npos) << r;
    }
    for (const std::string &x : kb.individuals()) {
      EXPECT_NE(doc.find("Declaration(NamedIndividual(:" + x + "))"), std::string::npos) << x;
    }
  }
}

}  // namespace
}  // namespace isaowl
