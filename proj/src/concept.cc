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

#include "isaowl/concept.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace isaowl {

namespace {

constexpr std::array<std::string_view, 4> kDatatypeNames = {"xsd:integer", "xsd:decimal",
                                                            "xsd:dateTime", "xsd:string"};

std::string Quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string LiteralText(const Literal &l) {
  return Quote(l.lexical) + "^^" + std::string(DatatypeName(l.type));
}

Concept Nary(Concept::Kind kind, std::vector<Concept> parts) {
  std::vector<Concept> flat;
  for (Concept &p : parts) {
    if (p.kind == kind) {
      for (Concept &q : p.args) flat.push_back(std::move(q));
    } else {
      flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) {
    return kind == Concept::Kind::kAnd ? Concept::Top() : Concept::Bottom();
  }
  if (flat.size() == 1) return std::move(flat.front());
  Concept c;
  c.kind = kind;
  c.args = std::move(flat);
  return c;
}

Concept Restriction(Concept::Kind kind, int64_t n, std::string role, Concept filler) {
  if (n < 0) throw std::invalid_argument("negative cardinality");
  Concept c;
  c.kind = kind;
  c.n = n;
  c.name = std::move(role);
  c.args.push_back(std::move(filler));
  return c;
}

template <typename T>
void AddUnique(std::vector<T> &v, const T &x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

std::string_view DatatypeName(Datatype d) { return kDatatypeNames[static_cast<size_t>(d)]; }

std::optional<Datatype> ParseDatatype(std::string_view name) {
  for (size_t i = 0; i < kDatatypeNames.size(); ++i) {
    if (kDatatypeNames[i] == name) return static_cast<Datatype>(i);
  }
  return std::nullopt;
}

Concept Concept::Top() { return Concept{}; }

Concept Concept::Bottom() {
  Concept c;
  c.kind = Kind::kBottom;
  return c;
}

Concept Concept::Atom(std::string label) {
  Concept c;
  c.kind = Kind::kAtomic;
  c.name = std::move(label);
  return c;
}

Concept Concept::Nominal(std::string individual) {
  Concept c;
  c.kind = Kind::kNominal;
  c.name = std::move(individual);
  return c;
}

Concept Concept::And(std::vector<Concept> parts) { return Nary(Kind::kAnd, std::move(parts)); }
Concept Concept::Or(std::vector<Concept> parts) { return Nary(Kind::kOr, std::move(parts)); }

Concept Concept::Not(Concept inner) {
  if (inner.kind == Kind::kNot) return std::move(inner.args.front());
  Concept c;
  c.kind = Kind::kNot;
  c.args.push_back(std::move(inner));
  return c;
}

Concept Concept::Exists(std::string role, Concept filler) {
  return Restriction(Kind::kExists, 0, std::move(role), std::move(filler));
}
Concept Concept::ForAll(std::string role, Concept filler) {
  return Restriction(Kind::kForAll, 0, std::move(role), std::move(filler));
}
Concept Concept::AtLeast(int64_t n, std::string role, Concept filler) {
  return Restriction(Kind::kAtLeast, n, std::move(role), std::move(filler));
}
Concept Concept::AtMost(int64_t n, std::string role, Concept filler) {
  return Restriction(Kind::kAtMost, n, std::move(role), std::move(filler));
}

Concept Concept::DataValue(std::string role, Literal value) {
  Concept c;
  c.kind = Kind::kDataExists;
  c.name = std::move(role);
  c.datatype = value.type;
  c.literal = std::move(value);
  return c;
}

Concept Concept::DataSome(std::string role, Datatype type) {
  Concept c;
  c.kind = Kind::kDataExists;
  c.name = std::move(role);
  c.datatype = type;
  return c;
}

Concept Concept::DataAll(std::string role, Datatype type) {
  Concept c;
  c.kind = Kind::kDataForAll;
  c.name = std::move(role);
  c.datatype = type;
  return c;
}

int Concept::Depth() const {
  int d = 0;
  for (const Concept &a : args) d = std::max(d, a.Depth());
  return args.empty() ? 0 : d + 1;
}

std::strong_ordering operator<=>(const Concept &a, const Concept &b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.datatype <=> b.datatype; c != 0) return c;
  if (auto c = a.literal.has_value() <=> b.literal.has_value(); c != 0) return c;
  if (a.literal) {
    if (auto c = a.literal->lexical <=> b.literal->lexical; c != 0) return c;
    if (auto c = a.literal->type <=> b.literal->type; c != 0) return c;
  }
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (size_t i = 0; i < a.args.size(); ++i) {
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Concept Canonicalize(const Concept &c) {
  std::vector<Concept> args;
  for (const Concept &a : c.args) args.push_back(Canonicalize(a));
  switch (c.kind) {
    case Concept::Kind::kAnd: return Concept::And(std::move(args));
    case Concept::Kind::kOr: return Concept::Or(std::move(args));
    case Concept::Kind::kNot: return Concept::Not(std::move(args.front()));
    default: {
      Concept out = c;
      out.args = std::move(args);
      return out;
    }
  }
}

std::string ToFunctional(const Concept &c) {
  auto list = [&](const char *head) {
    std::string s = std::string(head) + "(";
    for (size_t i = 0; i < c.args.size(); ++i) {
      if (i) s += " ";
      s += ToFunctional(c.args[i]);
    }
    return s + ")";
  };
  switch (c.kind) {
    case Concept::Kind::kTop: return "owl:Thing";
    case Concept::Kind::kBottom: return "owl:Nothing";
    case Concept::Kind::kAtomic: return ":" + c.name;
    case Concept::Kind::kNominal: return "ObjectOneOf(:" + c.name + ")";
    case Concept::Kind::kAnd: return list("ObjectIntersectionOf");
    case Concept::Kind::kOr: return list("ObjectUnionOf");
    case Concept::Kind::kNot: return list("ObjectComplementOf");
    case Concept::Kind::kExists:
      return "ObjectSomeValuesFrom(:" + c.name + " " + ToFunctional(c.args[0]) + ")";
    case Concept::Kind::kForAll:
      return "ObjectAllValuesFrom(:" + c.name + " " + ToFunctional(c.args[0]) + ")";
    case Concept::Kind::kAtLeast:
      return "ObjectMinCardinality(" + std::to_string(c.n) + " :" + c.name + " " +
             ToFunctional(c.args[0]) + ")";
    case Concept::Kind::kAtMost:
      return "ObjectMaxCardinality(" + std::to_string(c.n) + " :" + c.name + " " +
             ToFunctional(c.args[0]) + ")";
    case Concept::Kind::kDataExists:
      if (c.literal) return "DataHasValue(:" + c.name + " " + LiteralText(*c.literal) + ")";
      return "DataSomeValuesFrom(:" + c.name + " " + std::string(DatatypeName(c.datatype)) + ")";
    case Concept::Kind::kDataForAll:
      return "DataAllValuesFrom(:" + c.name + " " + std::string(DatatypeName(c.datatype)) + ")";
  }
  return "";
}

std::string ToDl(const Concept &c) {
  auto wrap = [](const Concept &x) {
    std::string s = ToDl(x);
    bool nary = x.kind == Concept::Kind::kAnd || x.kind == Concept::Kind::kOr;
    return nary ? "(" + s + ")" : s;
  };
  auto join = [&](const char *op) {
    std::string s;
    for (size_t i = 0; i < c.args.size(); ++i) {
      if (i) s += op;
      s += wrap(c.args[i]);
    }
    return s;
  };
  switch (c.kind) {
    case Concept::Kind::kTop: return "⊤";
    case Concept::Kind::kBottom: return "⊥";
    case Concept::Kind::kAtomic: return c.name;
    case Concept::Kind::kNominal: return "{" + c.name + "}";
    case Concept::Kind::kAnd: return join(" ⊓ ");
    case Concept::Kind::kOr: return join(" ⊔ ");
    case Concept::Kind::kNot: return "¬" + wrap(c.args[0]);
    case Concept::Kind::kExists: return "∃" + c.name + "." + wrap(c.args[0]);
    case Concept::Kind::kForAll: return "∀" + c.name + "." + wrap(c.args[0]);
    case Concept::Kind::kAtLeast:
      return "≥" + std::to_string(c.n) + " " + c.name + "." + wrap(c.args[0]);
    case Concept::Kind::kAtMost:
      return "≤" + std::to_string(c.n) + " " + c.name + "." + wrap(c.args[0]);
    case Concept::Kind::kDataExists:
      if (c.literal) return "∃" + c.name + ".{" + c.literal->lexical + "}";
      return "∃" + c.name + "." + std::string(DatatypeName(c.datatype));
    case Concept::Kind::kDataForAll:
      return "∀" + c.name + "." + std::string(DatatypeName(c.datatype));
  }
  return "";
}

void CollectSymbols(const Concept &c, ConceptSymbols &out) {
  switch (c.kind) {
    case Concept::Kind::kAtomic: AddUnique(out.concepts, c.name); break;
    case Concept::Kind::kNominal: AddUnique(out.individuals, c.name); break;
    case Concept::Kind::kExists:
    case Concept::Kind::kForAll:
    case Concept::Kind::kAtLeast:
    case Concept::Kind::kAtMost: AddUnique(out.object_roles, c.name); break;
    case Concept::Kind::kDataExists:
    case Concept::Kind::kDataForAll:
      AddUnique(out.data_roles, c.name);
      AddUnique(out.datatypes, c.datatype);
      break;
    default: break;
  }
  for (const Concept &a : c.args) CollectSymbols(a, out);
}

}  // namespace isaowl
