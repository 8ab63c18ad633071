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

#ifndef ISAOWL_KNOWLEDGE_BASE_H_
#define ISAOWL_KNOWLEDGE_BASE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isaowl/concept.h"

namespace isaowl {

// Annotation keys carrying provenance.
inline constexpr std::string_view kSourceAnnotation = "source";
inline constexpr std::string_view kRuleAnnotation = "rule";

enum class RoleKind { kAbstract, kConcrete };

struct Axiom {
  enum class Kind {
    kSubClassOf,
    kEquivalentClasses,
    kSubRole,
    kTransitive,
    kClassAssertion,
    kRoleAssertion,
    kDataAssertion,
  };

  Kind kind = Kind::kSubClassOf;
  Concept lhs;  // SubClassOf / EquivalentClasses / ClassAssertion concept
  Concept rhs;
  std::string role;        // SubRole sub, Transitive, Role/Data assertion
  std::string super_role;  // SubRole super
  RoleKind role_kind = RoleKind::kAbstract;  // SubRole only
  std::string individual;
  std::string individual2;  // RoleAssertion object
  Literal value;            // DataAssertion value
  std::map<std::string, std::string> annotations;

  static Axiom SubClassOf(Concept sub, Concept super);
  static Axiom Equivalent(Concept a, Concept b);
  static Axiom SubRole(std::string sub, std::string super, RoleKind kind);
  static Axiom Transitive(std::string role);
  static Axiom ClassAssertion(Concept c, std::string individual);
  static Axiom RoleAssertion(std::string role, std::string a, std::string b);
  static Axiom DataAssertion(std::string role, std::string a, Literal value);

  Axiom &Annotate(std::string key, std::string value);

  bool IsAbox() const;
  // Functional-syntax text without annotations; equal keys mean the same
  // logical axiom.
  std::string Key() const;
  // Full line including annotations.
  std::string ToFunctional() const;
  std::string ToDl() const;

  bool operator==(const Axiom &o) const { return Key() == o.Key() && annotations == o.annotations; }
};

// Fixed vocabulary known to every knowledge base.
struct Primitives {
  static const std::set<std::string> &Concepts();
  static const std::map<std::string, RoleKind> &Roles();
  static bool IsConcept(std::string_view name);
};

class KnowledgeBase {
 public:
  // Adds the axiom unless a logically identical one is present (the first
  // provenance is kept). Returns true when added. Throws
  // Error(kMixedRoleKinds) when a role would be both abstract and concrete,
  // or transitivity is declared on a concrete role.
  bool Add(Axiom ax);

  const std::vector<Axiom> &axioms() const { return axioms_; }
  std::vector<const Axiom *> Tbox() const;
  std::vector<const Axiom *> Abox() const;
  size_t size() const { return axioms_.size(); }
  bool empty() const { return axioms_.empty(); }
  bool Contains(const Axiom &ax) const { return index_.count(ax.Key()) > 0; }

  const std::set<std::string> &concepts() const { return concepts_; }
  const std::set<std::string> &object_roles() const { return object_roles_; }
  const std::set<std::string> &data_roles() const { return data_roles_; }
  const std::set<std::string> &individuals() const { return individuals_; }
  const std::set<Datatype> &datatypes() const { return datatypes_; }
  std::optional<RoleKind> KindOfRole(const std::string &role) const;

  // One message per ABox concept assertion whose named concepts appear in
  // no TBox axiom (primitive concepts are exempt).
  std::vector<std::string> InductionWarnings() const;

  bool operator==(const KnowledgeBase &o) const;

 private:
  void RegisterRole(const std::string &role, RoleKind kind);
  void Register(const Axiom &ax);

  std::vector<Axiom> axioms_;
  std::map<std::string, size_t> index_;
  std::set<std::string> concepts_;
  std::set<std::string> object_roles_;
  std::set<std::string> data_roles_;
  std::set<std::string> individuals_;
  std::set<Datatype> datatypes_;
};

// Axioms of `a` followed by the new axioms of `b`.
KnowledgeBase Merge(const KnowledgeBase &a, const KnowledgeBase &b);

}  // namespace isaowl

#endif  // ISAOWL_KNOWLEDGE_BASE_H_
