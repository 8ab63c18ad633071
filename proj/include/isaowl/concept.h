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

#ifndef ISAOWL_CONCEPT_H_
#define ISAOWL_CONCEPT_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isaowl {

enum class Datatype { kInteger, kDecimal, kDateTime, kString };
std::string_view DatatypeName(Datatype d);  // "xsd:integer", ...
std::optional<Datatype> ParseDatatype(std::string_view name);

struct Literal {
  std::string lexical;
  Datatype type = Datatype::kString;

  friend auto operator<=>(const Literal &, const Literal &) = default;
  friend bool operator==(const Literal &, const Literal &) = default;
};

// SHOQ(D) concept expression. Instances built through the factory functions
// are canonical: And/Or are flattened, sorted, deduplicated and hold at least
// two members; double negation is removed.
struct Concept {
  enum class Kind {
    kTop,
    kBottom,
    kAtomic,
    kNominal,
    kAnd,
    kOr,
    kNot,
    kExists,
    kForAll,
    kAtLeast,
    kAtMost,
    kDataExists,
    kDataForAll,
  };

  Kind kind = Kind::kTop;
  // Atomic: concept label. Nominal: individual. Restrictions: role name.
  std::string name;
  int64_t n = 0;
  std::vector<Concept> args;
  // kDataExists holds either a literal value or a datatype.
  std::optional<Literal> literal;
  Datatype datatype = Datatype::kString;

  static Concept Top();
  static Concept Bottom();
  static Concept Atom(std::string label);
  static Concept Nominal(std::string individual);
  static Concept And(std::vector<Concept> parts);
  static Concept Or(std::vector<Concept> parts);
  static Concept Not(Concept c);
  static Concept Exists(std::string role, Concept filler);
  static Concept ForAll(std::string role, Concept filler);
  static Concept AtLeast(int64_t n, std::string role, Concept filler);
  static Concept AtMost(int64_t n, std::string role, Concept filler);
  static Concept DataValue(std::string role, Literal value);
  static Concept DataSome(std::string role, Datatype type);
  static Concept DataAll(std::string role, Datatype type);

  bool IsAtomic() const { return kind == Kind::kAtomic; }
  int Depth() const;

  friend std::strong_ordering operator<=>(const Concept &a, const Concept &b);
  friend bool operator==(const Concept &a, const Concept &b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// Re-applies the canonical form bottom-up (factories already do this).
Concept Canonicalize(const Concept &c);

// OWL 2 functional-style rendering with the default ':' prefix.
std::string ToFunctional(const Concept &c);
// Compact DL notation for diagnostics, e.g. "WildCat ⊓ ∃hasAttribute.Wild".
std::string ToDl(const Concept &c);

// Atomic names, nominal individuals, abstract and concrete roles used.
struct ConceptSymbols {
  std::vector<std::string> concepts;
  std::vector<std::string> individuals;
  std::vector<std::string> object_roles;
  std::vector<std::string> data_roles;
  std::vector<Datatype> datatypes;
};
void CollectSymbols(const Concept &c, ConceptSymbols &out);

}  // namespace isaowl

#endif  // ISAOWL_CONCEPT_H_
