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

#include "isaowl/knowledge_base.h"

#include <utility>

#include "isaowl/error.h"

namespace isaowl {

namespace {

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

std::string Body(const Axiom &ax) {
  switch (ax.kind) {
    case Axiom::Kind::kSubClassOf:
      return ToFunctional(ax.lhs) + " " + ToFunctional(ax.rhs);
    case Axiom::Kind::kEquivalentClasses:
      return ToFunctional(ax.lhs) + " " + ToFunctional(ax.rhs);
    case Axiom::Kind::kSubRole:
      return ":" + ax.role + " :" + ax.super_role;
    case Axiom::Kind::kTransitive:
      return ":" + ax.role;
    case Axiom::Kind::kClassAssertion:
      return ToFunctional(ax.lhs) + " :" + ax.individual;
    case Axiom::Kind::kRoleAssertion:
      return ":" + ax.role + " :" + ax.individual + " :" + ax.individual2;
    case Axiom::Kind::kDataAssertion:
      return ":" + ax.role + " :" + ax.individual + " " + LiteralText(ax.value);
  }
  return "";
}

std::string Head(const Axiom &ax) {
  switch (ax.kind) {
    case Axiom::Kind::kSubClassOf: return "SubClassOf";
    case Axiom::Kind::kEquivalentClasses: return "EquivalentClasses";
    case Axiom::Kind::kSubRole:
      return ax.role_kind == RoleKind::kAbstract ? "SubObjectPropertyOf" : "SubDataPropertyOf";
    case Axiom::Kind::kTransitive: return "TransitiveObjectProperty";
    case Axiom::Kind::kClassAssertion: return "ClassAssertion";
    case Axiom::Kind::kRoleAssertion: return "ObjectPropertyAssertion";
    case Axiom::Kind::kDataAssertion: return "DataPropertyAssertion";
  }
  return "";
}

}  // namespace

Axiom Axiom::SubClassOf(Concept sub, Concept super) {
  Axiom a;
  a.kind = Kind::kSubClassOf;
  a.lhs = std::move(sub);
  a.rhs = std::move(super);
  return a;
}

Axiom Axiom::Equivalent(Concept x, Concept y) {
  Axiom a;
  a.kind = Kind::kEquivalentClasses;
  if (y < x) std::swap(x, y);
  a.lhs = std::move(x);
  a.rhs = std::move(y);
  return a;
}

Axiom Axiom::SubRole(std::string sub, std::string super, RoleKind kind) {
  Axiom a;
  a.kind = Kind::kSubRole;
  a.role = std::move(sub);
  a.super_role = std::move(super);
  a.role_kind = kind;
  return a;
}

Axiom Axiom::Transitive(std::string role) {
  Axiom a;
  a.kind = Kind::kTransitive;
  a.role = std::move(role);
  return a;
}

Axiom Axiom::ClassAssertion(Concept c, std::string individual) {
  Axiom a;
  a.kind = Kind::kClassAssertion;
  a.lhs = std::move(c);
  a.individual = std::move(individual);
  return a;
}

Axiom Axiom::RoleAssertion(std::string role, std::string x, std::string y) {
  Axiom a;
  a.kind = Kind::kRoleAssertion;
  a.role = std::move(role);
  a.individual = std::move(x);
  a.individual2 = std::move(y);
  return a;
}

Axiom Axiom::DataAssertion(std::string role, std::string x, Literal value) {
  Axiom a;
  a.kind = Kind::kDataAssertion;
  a.role = std::move(role);
  a.individual = std::move(x);
  a.value = std::move(value);
  return a;
}

Axiom &Axiom::Annotate(std::string key, std::string value) {
  annotations[std::move(key)] = std::move(value);
  return *this;
}

bool Axiom::IsAbox() const {
  return kind == Kind::kClassAssertion || kind == Kind::kRoleAssertion ||
         kind == Kind::kDataAssertion;
}

std::string Axiom::Key() const { return Head(*this) + "(" + Body(*this) + ")"; }

std::string Axiom::ToFunctional() const {
  std::string s = Head(*this) + "(";
  for (const auto &[k, v] : annotations) s += "Annotation(:" + k + " " + Quote(v) + ") ";
  return s + Body(*this) + ")";
}

std::string Axiom::ToDl() const {
  switch (kind) {
    case Kind::kSubClassOf: return isaowl::ToDl(lhs) + " ⊑ " + isaowl::ToDl(rhs);
    case Kind::kEquivalentClasses: return isaowl::ToDl(lhs) + " ≡ " + isaowl::ToDl(rhs);
    case Kind::kSubRole: return role + " ⊑ " + super_role;
    case Kind::kTransitive: return "Trans(" + role + ")";
    case Kind::kClassAssertion: return "(" + isaowl::ToDl(lhs) + ")(" + individual + ")";
    case Kind::kRoleAssertion: return role + "(" + individual + ", " + individual2 + ")";
    case Kind::kDataAssertion: return role + "(" + individual + ", " + value.lexical + ")";
  }
  return "";
}

const std::set<std::string> &Primitives::Concepts() {
  static const std::set<std::string> *names = new std::set<std::string>{
      "Person", "Location", "Organization", "Misc",  "Cardinality", "Dimension",
      "ProperInterval", "Instant", "DurationDescription", "Year", "Month", "Week",
      "Day", "Hour", "Minute", "Second"};
  return *names;
}

const std::map<std::string, RoleKind> &Primitives::Roles() {
  static const std::map<std::string, RoleKind> *roles = [] {
    auto *m = new std::map<std::string, RoleKind>;
    for (const char *r : {"hasAttribute", "include", "belongsTo", "hasCardinality", "isTrueFor",
                          "hasEnd", "hasBeginning", "inDateTime", "intervalMeets",
                          "hasDurationDescription", "mayBe", "canBecome"}) {
      (*m)[r] = RoleKind::kAbstract;
    }
    for (const char *r : {"minInclusive", "maxInclusive", "minExclusive", "maxExclusive", "years",
                          "months", "weeks", "days", "hours", "minutes", "seconds",
                          "inXSDDateTime"}) {
      (*m)[r] = RoleKind::kConcrete;
    }
    return m;
  }();
  return *roles;
}

bool Primitives::IsConcept(std::string_view name) {
  return Concepts().count(std::string(name)) > 0;
}

std::optional<RoleKind> KnowledgeBase::KindOfRole(const std::string &role) const {
  if (object_roles_.count(role)) return RoleKind::kAbstract;
  if (data_roles_.count(role)) return RoleKind::kConcrete;
  auto it = Primitives::Roles().find(role);
  if (it != Primitives::Roles().end()) return it->second;
  return std::nullopt;
}

void KnowledgeBase::RegisterRole(const std::string &role, RoleKind kind) {
  std::optional<RoleKind> known = KindOfRole(role);
  if (known && *known != kind) {
    throw Error(ErrorCode::kMixedRoleKinds, "role '" + role + "' used as both abstract and concrete");
  }
  (kind == RoleKind::kAbstract ? object_roles_ : data_roles_).insert(role);
}

void KnowledgeBase::Register(const Axiom &ax) {
  ConceptSymbols sym;
  CollectSymbols(ax.lhs, sym);
  CollectSymbols(ax.rhs, sym);
  switch (ax.kind) {
    case Axiom::Kind::kSubRole:
      RegisterRole(ax.role, ax.role_kind);
      RegisterRole(ax.super_role, ax.role_kind);
      break;
    case Axiom::Kind::kTransitive:
      if (KindOfRole(ax.role) == RoleKind::kConcrete) {
        throw Error(ErrorCode::kMixedRoleKinds, "transitivity on concrete role '" + ax.role + "'");
      }
      RegisterRole(ax.role, RoleKind::kAbstract);
      break;
    case Axiom::Kind::kClassAssertion:
      individuals_.insert(ax.individual);
      break;
    case Axiom::Kind::kRoleAssertion:
      RegisterRole(ax.role, RoleKind::kAbstract);
      individuals_.insert(ax.individual);
      individuals_.insert(ax.individual2);
      break;
    case Axiom::Kind::kDataAssertion:
      RegisterRole(ax.role, RoleKind::kConcrete);
      individuals_.insert(ax.individual);
      datatypes_.insert(ax.value.type);
      break;
    default: break;
  }
  for (const std::string &r : sym.object_roles) RegisterRole(r, RoleKind::kAbstract);
  for (const std::string &r : sym.data_roles) RegisterRole(r, RoleKind::kConcrete);
  concepts_.insert(sym.concepts.begin(), sym.concepts.end());
  individuals_.insert(sym.individuals.begin(), sym.individuals.end());
  datatypes_.insert(sym.datatypes.begin(), sym.datatypes.end());
}

bool KnowledgeBase::Add(Axiom ax) {
  std::string key = ax.Key();
  if (index_.count(key)) return false;
  // Dry run on copies of the role tables; throws before any state changes.
  KnowledgeBase probe_tables;
  probe_tables.object_roles_ = object_roles_;
  probe_tables.data_roles_ = data_roles_;
  probe_tables.Register(ax);
  Register(ax);
  index_.emplace(std::move(key), axioms_.size());
  axioms_.push_back(std::move(ax));
  return true;
}

std::vector<const Axiom *> KnowledgeBase::Tbox() const {
  std::vector<const Axiom *> out;
  for (const Axiom &a : axioms_) {
    if (!a.IsAbox()) out.push_back(&a);
  }
  return out;
}

std::vector<const Axiom *> KnowledgeBase::Abox() const {
  std::vector<const Axiom *> out;
  for (const Axiom &a : axioms_) {
    if (a.IsAbox()) out.push_back(&a);
  }
  return out;
}

std::vector<std::string> KnowledgeBase::InductionWarnings() const {
  std::set<std::string> tbox_concepts;
  for (const Axiom *a : Tbox()) {
    ConceptSymbols sym;
    CollectSymbols(a->lhs, sym);
    CollectSymbols(a->rhs, sym);
    tbox_concepts.insert(sym.concepts.begin(), sym.concepts.end());
  }
  std::vector<std::string> warnings;
  for (const Axiom *a : Abox()) {
    if (a->kind != Axiom::Kind::kClassAssertion) continue;
    ConceptSymbols sym;
    CollectSymbols(a->lhs, sym);
    bool needs = false, induced = false;
    for (const std::string &c : sym.concepts) {
      if (Primitives::IsConcept(c)) continue;
      needs = true;
      if (tbox_concepts.count(c)) induced = true;
    }
    if (needs && !induced) {
      warnings.push_back("induction-missing: " + a->ToDl());
    }
  }
  return warnings;
}

bool KnowledgeBase::operator==(const KnowledgeBase &o) const {
  return axioms_ == o.axioms_ && concepts_ == o.concepts_ && object_roles_ == o.object_roles_ &&
         data_roles_ == o.data_roles_ && individuals_ == o.individuals_ &&
         datatypes_ == o.datatypes_;
}

KnowledgeBase Merge(const KnowledgeBase &a, const KnowledgeBase &b) {
  KnowledgeBase out = a;
  for (const Axiom &ax : b.axioms()) out.Add(ax);
  return out;
}

}  // namespace isaowl
