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

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "isaowl/error.h"

namespace isaowl {

namespace {

using nlohmann::json;

struct Tok {
  enum class Type { kOpen, kClose, kWord, kString, kEnd };
  Type type = Type::kEnd;
  std::string text;
  std::string datatype;  // for kString with ^^
  int line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Tok Next() {
    SkipSpace();
    Tok t;
    t.line = line_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      t.type = Tok::Type::kOpen;
      t.text = "(";
    } else if (c == ')') {
      ++pos_;
      t.type = Tok::Type::kClose;
      t.text = ")";
    } else if (c == '"') {
      t.type = Tok::Type::kString;
      ++pos_;
      bool closed = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_++];
        if (d == '\\' && pos_ < text_.size()) {
          t.text += text_[pos_++];
        } else if (d == '"') {
          closed = true;
          break;
        } else {
          if (d == '\n') ++line_;
          t.text += d;
        }
      }
      if (!closed) Fail(t.line, "closing quote");
      if (text_.substr(pos_, 2) == "^^") {
        pos_ += 2;
        t.datatype = Word();
        if (t.datatype.empty()) Fail(line_, "datatype after ^^");
      }
    } else {
      t.type = Tok::Type::kWord;
      t.text = Word();
    }
    return t;
  }

  [[noreturn]] static void Fail(int line, const std::string &expected) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": expected " + expected);
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string Word() {
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"') break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { Advance(); }

  KnowledgeBase Run() {
    while (IsWord("Prefix")) {
      Advance();
      Expect(Tok::Type::kOpen, "'(' after Prefix");
      ExpectWord("prefix declaration");
      Expect(Tok::Type::kClose, "')' closing Prefix");
    }
    if (!IsWord("Ontology")) Lexer::Fail(cur_.line, "Ontology(");
    Advance();
    Expect(Tok::Type::kOpen, "'(' after Ontology");
    if (cur_.type == Tok::Type::kWord && cur_.text.starts_with("<")) Advance();
    KnowledgeBase kb;
    while (cur_.type != Tok::Type::kClose) {
      if (cur_.type != Tok::Type::kWord) Lexer::Fail(cur_.line, "axiom or ')'");
      if (cur_.text == "Declaration") {
        ParseDeclaration();
      } else {
        int line = cur_.line;
        Axiom ax = ParseAxiom();
        try {
          kb.Add(std::move(ax));
        } catch (const Error &e) {
          Lexer::Fail(line, std::string("consistent role kinds (") + e.what() + ")");
        }
      }
    }
    Advance();
    if (cur_.type != Tok::Type::kEnd) Lexer::Fail(cur_.line, "end of document");
    return kb;
  }

 private:
  void Advance() { cur_ = lex_.Next(); }

  bool IsWord(std::string_view w) const { return cur_.type == Tok::Type::kWord && cur_.text == w; }

  void Expect(Tok::Type type, const std::string &what) {
    if (cur_.type != type) Lexer::Fail(cur_.line, what);
    Advance();
  }

  std::string ExpectWord(const std::string &what) {
    if (cur_.type != Tok::Type::kWord) Lexer::Fail(cur_.line, what);
    std::string w = cur_.text;
    Advance();
    return w;
  }

  std::string Name(const std::string &what) {
    if (cur_.type != Tok::Type::kWord || !cur_.text.starts_with(":") || cur_.text.size() < 2) {
      Lexer::Fail(cur_.line, what);
    }
    std::string n = cur_.text.substr(1);
    Advance();
    return n;
  }

  int64_t Integer(const std::string &what) {
    if (cur_.type != Tok::Type::kWord || cur_.text.empty()) Lexer::Fail(cur_.line, what);
    for (char c : cur_.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) Lexer::Fail(cur_.line, what);
    }
    int64_t n = std::stoll(cur_.text);
    Advance();
    return n;
  }

  Datatype DatatypeRef(const std::string &text, int line) {
    auto d = ParseDatatype(text);
    if (!d) Lexer::Fail(line, "xsd datatype");
    return *d;
  }

  Literal ParseLiteral() {
    if (cur_.type != Tok::Type::kString || cur_.datatype.empty()) {
      Lexer::Fail(cur_.line, "typed literal");
    }
    Literal l{cur_.text, DatatypeRef(cur_.datatype, cur_.line)};
    Advance();
    return l;
  }

  void ParseDeclaration() {
    Advance();
    Expect(Tok::Type::kOpen, "'(' after Declaration");
    std::string kind = ExpectWord("entity type");
    if (kind != "Class" && kind != "ObjectProperty" && kind != "DataProperty" &&
        kind != "NamedIndividual" && kind != "AnnotationProperty" && kind != "Datatype") {
      Lexer::Fail(cur_.line, "entity type");
    }
    Expect(Tok::Type::kOpen, "'(' after entity type");
    ExpectWord("entity name");
    Expect(Tok::Type::kClose, "')'");
    Expect(Tok::Type::kClose, "')' closing Declaration");
  }

  Concept ParseConcept() {
    if (cur_.type != Tok::Type::kWord) Lexer::Fail(cur_.line, "class expression");
    std::string head = cur_.text;
    int line = cur_.line;
    if (head == "owl:Thing") {
      Advance();
      return Concept::Top();
    }
    if (head == "owl:Nothing") {
      Advance();
      return Concept::Bottom();
    }
    if (head.starts_with(":")) return Concept::Atom(Name("class name"));
    Advance();
    Expect(Tok::Type::kOpen, "'(' after " + head);
    Concept c;
    if (head == "ObjectIntersectionOf" || head == "ObjectUnionOf") {
      std::vector<Concept> parts;
      while (cur_.type != Tok::Type::kClose) parts.push_back(ParseConcept());
      if (parts.size() < 2) Lexer::Fail(line, "at least two operands in " + head);
      c = head == "ObjectIntersectionOf" ? Concept::And(std::move(parts))
                                         : Concept::Or(std::move(parts));
    } else if (head == "ObjectComplementOf") {
      c = Concept::Not(ParseConcept());
    } else if (head == "ObjectOneOf") {
      c = Concept::Nominal(Name("individual"));
    } else if (head == "ObjectSomeValuesFrom" || head == "ObjectAllValuesFrom") {
      std::string role = Name("object property");
      Concept filler = ParseConcept();
      c = head == "ObjectSomeValuesFrom" ? Concept::Exists(role, std::move(filler))
                                         : Concept::ForAll(role, std::move(filler));
    } else if (head == "ObjectMinCardinality" || head == "ObjectMaxCardinality") {
      int64_t n = Integer("cardinality");
      std::string role = Name("object property");
      Concept filler = ParseConcept();
      c = head == "ObjectMinCardinality" ? Concept::AtLeast(n, role, std::move(filler))
                                         : Concept::AtMost(n, role, std::move(filler));
    } else if (head == "DataHasValue") {
      std::string role = Name("data property");
      c = Concept::DataValue(role, ParseLiteral());
    } else if (head == "DataSomeValuesFrom" || head == "DataAllValuesFrom") {
      std::string role = Name("data property");
      int dline = cur_.line;
      Datatype d = DatatypeRef(ExpectWord("datatype"), dline);
      c = head == "DataSomeValuesFrom" ? Concept::DataSome(role, d) : Concept::DataAll(role, d);
    } else {
      Lexer::Fail(line, "class expression constructor");
    }
    Expect(Tok::Type::kClose, "')' closing " + head);
    return c;
  }

  Axiom ParseAxiom() {
    std::string head = cur_.text;
    int line = cur_.line;
    Advance();
    Expect(Tok::Type::kOpen, "'(' after " + head);
    std::map<std::string, std::string> annotations;
    while (IsWord("Annotation")) {
      Advance();
      Expect(Tok::Type::kOpen, "'(' after Annotation");
      std::string key = Name("annotation property");
      if (cur_.type != Tok::Type::kString) Lexer::Fail(cur_.line, "annotation string");
      annotations[key] = cur_.text;
      Advance();
      Expect(Tok::Type::kClose, "')' closing Annotation");
    }
    Axiom ax;
    if (head == "SubClassOf") {
      Concept a = ParseConcept();
      ax = Axiom::SubClassOf(std::move(a), ParseConcept());
    } else if (head == "EquivalentClasses") {
      Concept a = ParseConcept();
      ax = Axiom::Equivalent(std::move(a), ParseConcept());
    } else if (head == "SubObjectPropertyOf" || head == "SubDataPropertyOf") {
      std::string sub = Name("property");
      std::string super = Name("property");
      ax = Axiom::SubRole(sub, super,
                          head == "SubObjectPropertyOf" ? RoleKind::kAbstract : RoleKind::kConcrete);
    } else if (head == "TransitiveObjectProperty") {
      ax = Axiom::Transitive(Name("object property"));
    } else if (head == "ClassAssertion") {
      Concept c = ParseConcept();
      ax = Axiom::ClassAssertion(std::move(c), Name("individual"));
    } else if (head == "ObjectPropertyAssertion") {
      std::string r = Name("object property");
      std::string a = Name("individual");
      ax = Axiom::RoleAssertion(r, a, Name("individual"));
    } else if (head == "DataPropertyAssertion") {
      std::string r = Name("data property");
      std::string a = Name("individual");
      ax = Axiom::DataAssertion(r, a, ParseLiteral());
    } else {
      Lexer::Fail(line, "axiom type");
    }
    Expect(Tok::Type::kClose, "')' closing " + head);
    ax.annotations = std::move(annotations);
    return ax;
  }

  Lexer lex_;
  Tok cur_;
};

}  // namespace

std::string SerializeOwl(const KnowledgeBase &kb) {
  std::ostringstream out;
  out << "Prefix(:=<" << kOntologyIri << "#>)\n";
  out << "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
  out << "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n";
  out << "Ontology(<" << kOntologyIri << ">\n";
  for (const std::string &c : kb.concepts()) out << "Declaration(Class(:" << c << "))\n";
  for (const std::string &r : kb.object_roles()) {
    out << "Declaration(ObjectProperty(:" << r << "))\n";
  }
  for (const std::string &r : kb.data_roles()) out << "Declaration(DataProperty(:" << r << "))\n";
  for (const std::string &i : kb.individuals()) {
    out << "Declaration(NamedIndividual(:" << i << "))\n";
  }
  std::set<std::string> annotation_keys;
  for (const Axiom &a : kb.axioms()) {
    for (const auto &kv : a.annotations) annotation_keys.insert(kv.first);
  }
  for (const std::string &k : annotation_keys) {
    out << "Declaration(AnnotationProperty(:" << k << "))\n";
  }
  for (const Axiom &a : kb.axioms()) out << a.ToFunctional() << "\n";
  out << ")\n";
  return out.str();
}

KnowledgeBase ParseOwl(std::string_view text) { return Parser(text).Run(); }

json KbToJson(const KnowledgeBase &kb) {
  static constexpr const char *kKinds[] = {"SubClassOf",      "EquivalentClasses", "SubRole",
                                           "Transitive",      "ClassAssertion",    "RoleAssertion",
                                           "DataAssertion"};
  json arr = json::array();
  for (const Axiom &a : kb.axioms()) {
    arr.push_back({{"kind", kKinds[static_cast<size_t>(a.kind)]},
                   {"box", a.IsAbox() ? "abox" : "tbox"},
                   {"owl", a.Key()},
                   {"dl", a.ToDl()},
                   {"annotations", a.annotations}});
  }
  return arr;
}

}  // namespace isaowl
