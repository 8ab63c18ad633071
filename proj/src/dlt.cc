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

#include "isaowl/dlt.h"

#include <algorithm>
#include <regex>
#include <set>
#include <utility>

#include "isaowl/error.h"
#include "isaowl/text.h"

namespace isaowl {

namespace {

const char *const kAttributeRole = "hasAttribute";

struct TimeUnit {
  const char *cls;
  const char *role;
};

const std::map<std::string, TimeUnit> &TimeUnits() {
  static const auto *units = new std::map<std::string, TimeUnit>{
      {"year", {"Year", "years"}},       {"month", {"Month", "months"}},
      {"week", {"Week", "weeks"}},       {"day", {"Day", "days"}},
      {"hour", {"Hour", "hours"}},       {"minute", {"Minute", "minutes"}},
      {"second", {"Second", "seconds"}}};
  return *units;
}

std::vector<std::string> Lexemes(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const Token &t : tokens) out.push_back(t.lexeme);
  return out;
}

Concept AttributeThing(const std::string &label) { return Concept::Atom(label + "Thing"); }

Axiom AttributeDefinition(const std::string &label) {
  return Axiom::Equivalent(AttributeThing(label),
                           Concept::Exists(kAttributeRole, Concept::Atom(label)));
}

Axiom Tagged(Axiom a, std::string_view rule) {
  a.Annotate(std::string(kRuleAnnotation), std::string(rule));
  return a;
}

// A translated subject or object entity.
struct Term {
  std::string label;
  Concept expr;
  std::string individual;  // set for proper nouns
  bool IsNominal() const { return !individual.empty(); }
};

class Translator {
 public:
  Translator(TranslationContext &ctx, const SourceId &source) : ctx_(ctx), source_(source) {}

  std::vector<Axiom> Run(const NssInstance &nss) {
    for (const NssInstance &part : DecomposeComplex(nss)) Simple(part);
    return std::move(out_);
  }

 private:
  const Lexicon &lex() const { return *ctx_.lexicon; }

  void Emit(Axiom a, std::string_view rule) {
    a = Tagged(std::move(a), rule);
    if (!source_.document.empty() || source_.line > 0) {
      a.Annotate(std::string(kSourceAnnotation), source_.ToString());
    }
    out_.push_back(std::move(a));
  }

  [[noreturn]] void Unsupported(const std::string &what) const {
    throw Error(ErrorCode::kUnsupportedPattern, what);
  }

  Term Describe(const Entity &e) {
    Term t;
    if (e.head.empty()) throw Error(ErrorCode::kLabelingFailure, "entity without head");
    if (e.IsProperNoun()) {
      t.individual = MakeLabel(e.HeadWords());
      t.label = t.individual;
      t.expr = Concept::Nominal(t.individual);
      for (const Token &m : e.modifiers) {
        std::string mod = MakeLabel({m.lexeme});
        std::string like = mod + "Like" + t.individual;
        Emit(Axiom::ClassAssertion(Concept::Atom(like), t.individual), "backward-nn-nnp");
        if (m.tag == "JJ") {
          Emit(Axiom::SubClassOf(Concept::Atom(like), AttributeThing(mod)), "backward-nn-nnp");
          Emit(AttributeDefinition(mod), "backward-modification");
        } else {
          Emit(Axiom::SubClassOf(Concept::Atom(like), Concept::Atom(mod)), "backward-nn-nnp");
        }
      }
      return t;
    }
    std::vector<std::string> words = Lexemes(e.modifiers);
    for (const std::string &w : e.HeadWords()) words.push_back(w);
    t.label = MakeLabel(words);
    std::string tag = e.HeadTag();
    if (tag == "JJ" || tag == "RB") {
      t.expr = AttributeThing(t.label);
      Emit(AttributeDefinition(t.label), "attribute");
      return t;
    }
    t.expr = Concept::Atom(t.label);
    for (Axiom &a : ModificationAxioms(e, lex())) {
      std::string rule = a.annotations[std::string(kRuleAnnotation)];
      a.annotations.clear();
      Emit(std::move(a), rule);
    }
    return t;
  }

  // Object phrase: conjunction or disjunction of its entities.
  Term DescribePhrase(const Phrase &p) {
    if (p.quantifier && p.quantifier->IsSpecial()) {
      Unsupported("quantified object '" + std::string(QuantifierName(p.quantifier->kind)) + "'");
    }
    if (p.list.entities.empty()) throw Error(ErrorCode::kLabelingFailure, "empty object");
    if (p.list.entities.size() == 1) return Describe(p.list.entities.front());
    std::vector<Concept> parts;
    std::vector<std::string> labels;
    for (const Entity &e : p.list.entities) {
      Term t = Describe(e);
      parts.push_back(t.expr);
      labels.push_back(t.label);
    }
    bool disj = p.list.kind == ListKind::kDisjunction;
    Term t;
    t.label = Join(labels, disj ? "Or" : "And");
    t.expr = disj ? Concept::Or(std::move(parts)) : Concept::And(std::move(parts));
    return t;
  }

  void Simple(const NssInstance &nss) {
    IsaKind kind = nss.isa1.kind;
    if (nss.temporal && kind != IsaKind::kTensePast) {
      Unsupported("temporal adjunct with " + std::string(IsaKindName(kind)));
    }
    // Object first, then the IS-A kind selects the rule family, then the subject.
    Term object = DescribePhrase(nss.object1);
    const EntityList &subjects = nss.subject.list;
    const std::optional<QuantifierCell> &q = nss.subject.quantifier;
    if (subjects.entities.empty()) throw Error(ErrorCode::kLabelingFailure, "empty subject");
    if (subjects.kind == ListKind::kDisjunction && subjects.entities.size() > 1) {
      if (kind != IsaKind::kHyponymy) {
        Unsupported("disjunctive subject with " + std::string(IsaKindName(kind)));
      }
      DisjunctiveSubject(q, subjects, object);
      return;
    }
    for (const Entity &e : subjects.entities) {
      switch (kind) {
        case IsaKind::kHyponymy: Hyponymy(q, e, object); break;
        case IsaKind::kHypernymy: Hypernymy(q, e, object); break;
        case IsaKind::kSimilarity: Similarity(q, e, object); break;
        case IsaKind::kEquivalence: Equivalence(q, e, object); break;
        case IsaKind::kModalMay:
        case IsaKind::kModalCan: Modal(q, e, object, kind); break;
        case IsaKind::kTensePast: Tense(q, e, object, nss.temporal); break;
      }
    }
  }

  static bool Plain(const std::optional<QuantifierCell> &q) {
    return !q || q->kind == QuantifierKind::kA || q->kind == QuantifierKind::kAn ||
           q->kind == QuantifierKind::kAll || q->kind == QuantifierKind::kThe ||
           q->kind == QuantifierKind::kSome;
  }

  void RequirePlain(const std::optional<QuantifierCell> &q, IsaKind kind) const {
    if (!Plain(q)) {
      Unsupported("quantifier '" + std::string(QuantifierName(q->kind)) + "' with " +
                  std::string(IsaKindName(kind)));
    }
  }

  void NamedInclusion(const Term &subject, const Term &object) {
    if (object.IsNominal()) {
      Emit(Axiom::Equivalent(subject.expr, object.expr), "nominal-identity");
      return;
    }
    const std::string &s = subject.individual;
    std::optional<NerClass> ner = LookupNer(lex(), s);
    if (!ner) {
      std::vector<std::string> spaced;
      for (const Token &t : subject_head_) spaced.push_back(t.lexeme);
      ner = LookupNer(lex(), Join(spaced, " "));
    }
    if (ner) {
      std::string label = object.label + std::string(NerClassName(*ner));
      Emit(Axiom::ClassAssertion(Concept::Atom(label), s), "inclusion-ner");
      Emit(Axiom::SubClassOf(Concept::Atom(label),
                             Concept::And({object.expr,
                                           Concept::Atom(std::string(NerClassName(*ner)))})),
           "inclusion-ner");
    } else {
      std::string label = object.label + "Like" + s;
      Emit(Axiom::ClassAssertion(Concept::Atom(label), s), "inclusion-nominal");
      Emit(Axiom::Equivalent(Concept::Atom(label),
                             Concept::And({object.expr, Concept::Nominal(s)})),
           "inclusion-nominal");
    }
  }

  void OnlyNamed(const Term &subject, const Term &object) {
    if (object.IsNominal()) Unsupported("'only' with a proper-noun object");
    int64_t n = TranslationContext::Next(ctx_.context_counters, object.label);
    std::string label = object.label + "_" + std::to_string(n);
    Emit(Axiom::ClassAssertion(Concept::Atom(label), subject.individual), "only-nnp");
    Emit(Axiom::SubClassOf(Concept::Atom(label), object.expr), "only-nnp");
    Emit(Axiom::SubClassOf(Concept::Atom(label), subject.expr), "only-nnp");
  }

  std::string GroupInstance(const std::string &label) {
    return label + "_" + std::to_string(TranslationContext::Next(ctx_.group_counters, label));
  }

  void AtLeast(const QuantifierCell &q, const Term &subject, const Term &object) {
    int64_t cd = q.count.value_or(0);
    if (cd == 0) {
      ctx_.warnings.push_back("degenerate bound: at least 0 " + subject.label +
                              (source_.document.empty() ? "" : " (" + source_.ToString() + ")"));
    }
    Literal bound{std::to_string(cd), Datatype::kInteger};
    auto cardinality = [&](const char *facet) {
      return Concept::Exists(
          "belongsTo",
          Concept::Exists("hasCardinality",
                          Concept::And({Concept::Atom("Cardinality"),
                                        Concept::DataValue(facet, bound)})));
    };
    std::string group = GroupInstance(subject.label);
    std::string label = object.label + group + "_Min" + std::to_string(cd);
    Emit(Axiom::Equivalent(Concept::Atom(label),
                           Concept::And({Concept::Atom(group), object.expr,
                                         cardinality("minInclusive")})),
         "at-least");
    Emit(Axiom::SubClassOf(Concept::Atom(group),
                           Concept::And({subject.expr, cardinality("minExclusive")})),
         "at-least");
  }

  void Hyponymy(const std::optional<QuantifierCell> &q, const Entity &e, const Term &object) {
    subject_head_ = e.head;
    if (e.IsProperNoun()) {
      Term subject = Describe(e);
      if (q && q->kind == QuantifierKind::kOnly) {
        OnlyNamed(subject, object);
        return;
      }
      RequirePlain(q, IsaKind::kHyponymy);
      NamedInclusion(subject, object);
      return;
    }
    Term subject = Describe(e);
    if (object.IsNominal()) {
      // "The student happens to be John" reads as "John is a student".
      RequirePlain(q, IsaKind::kHyponymy);
      Term named = object;
      subject_head_.clear();
      NamedInclusion(named, subject);
      return;
    }
    QuantifierKind kind = q ? q->kind : QuantifierKind::kA;
    switch (kind) {
      case QuantifierKind::kA:
      case QuantifierKind::kAn:
      case QuantifierKind::kAll:
        Emit(Axiom::SubClassOf(subject.expr, object.expr), "inclusion");
        return;
      case QuantifierKind::kSome:
      case QuantifierKind::kThe: {
        std::string label = object.label + subject.label;
        bool some = kind == QuantifierKind::kSome;
        const char *rule = some ? "subject-quantifier-some" : "subject-quantifier-the";
        Emit(Axiom::SubClassOf(Concept::Atom(label),
                               Concept::And({subject.expr, object.expr})),
             rule);
        if (!some) {
          Emit(Axiom::ClassAssertion(Concept::Atom(label), GroupInstance(subject.label)), rule);
        }
        return;
      }
      case QuantifierKind::kAtLeast: AtLeast(*q, subject, object); return;
      case QuantifierKind::kOnly:
        Emit(Axiom::SubClassOf(object.expr, subject.expr), "only");
        ctx_.only_constraints.push_back({subject.label, object.label, source_});
        return;
      case QuantifierKind::kAtMost:
      case QuantifierKind::kExactly:
        Unsupported("subject quantifier '" + std::string(QuantifierName(kind)) + "'");
    }
  }

  void DisjunctiveSubject(const std::optional<QuantifierCell> &q, const EntityList &list,
                          const Term &object) {
    RequirePlain(q, IsaKind::kHyponymy);
    std::vector<Term> terms;
    bool all_named = true;
    for (const Entity &e : list.entities) {
      terms.push_back(Describe(e));
      all_named = all_named && terms.back().IsNominal();
    }
    std::vector<Concept> alts;
    std::vector<std::string> names;
    for (const Term &t : terms) {
      alts.push_back(t.expr);
      names.push_back(t.label);
    }
    if (all_named && !object.IsNominal()) {
      std::string label = Join(names, "Or") + object.label;
      Emit(Axiom::Equivalent(Concept::Atom(label),
                             Concept::And({Concept::Or(std::move(alts)), object.expr})),
           "disjunctive-subject");
      Emit(Axiom::ClassAssertion(Concept::Atom(label), GroupInstance(label)),
           "disjunctive-subject");
      return;
    }
    Emit(Axiom::SubClassOf(Concept::Or(std::move(alts)), object.expr), "disjunctive-subject");
  }

  void Hypernymy(const std::optional<QuantifierCell> &q, const Entity &e, const Term &object) {
    RequirePlain(q, IsaKind::kHypernymy);
    Term subject = Describe(e);
    if (subject.IsNominal() || object.IsNominal()) {
      Unsupported("'includes' with a proper noun");
    }
    if (LookupHypernym(lex(), object.label, subject.label)) {
      Emit(Axiom::SubClassOf(object.expr, subject.expr), "subject-hypernymy");
      return;
    }
    std::string role = "include" + object.label;
    std::vector<Concept> &fillers = ctx_.holonymy[subject.label];
    Concept conjunct = Concept::Exists(role, object.expr);
    if (std::find(fillers.begin(), fillers.end(), conjunct) == fillers.end()) {
      fillers.push_back(conjunct);
    }
    Emit(Axiom::SubClassOf(subject.expr, Concept::And(fillers)), "subject-holonymy");
    Emit(Axiom::SubRole(role, "include", RoleKind::kAbstract), "subject-holonymy");
    Emit(Axiom::Transitive(role), "subject-holonymy");
    Emit(Axiom::Transitive("include"), "subject-holonymy");
  }

  void Similarity(const std::optional<QuantifierCell> &q, const Entity &e, const Term &object) {
    RequirePlain(q, IsaKind::kSimilarity);
    Term subject = Describe(e);
    Concept common = Concept::Atom(subject.label + object.label + "Like");
    Emit(Axiom::SubClassOf(subject.expr, common), "similarity");
    Emit(Axiom::SubClassOf(object.expr, common), "similarity");
    Emit(Axiom::Equivalent(common, Concept::And({Concept::Atom(subject.label + "Like"),
                                                 Concept::Atom(object.label + "Like")})),
         "similarity");
  }

  void Equivalence(const std::optional<QuantifierCell> &q, const Entity &e, const Term &object) {
    RequirePlain(q, IsaKind::kEquivalence);
    Term subject = Describe(e);
    Emit(Axiom::Equivalent(subject.expr, object.expr), "equivalence");
  }

  // Concept standing for the subject in tense and modal axioms.
  Concept SubjectConcept(const Term &subject, std::string_view rule) {
    if (!subject.IsNominal()) return subject.expr;
    Concept c = Concept::Atom(subject.individual + "Concept");
    Emit(Axiom::ClassAssertion(c, subject.individual), rule);
    return c;
  }

  void Modal(const std::optional<QuantifierCell> &q, const Entity &e, const Term &object,
             IsaKind kind) {
    RequirePlain(q, kind);
    Term subject = Describe(e);
    bool may = kind == IsaKind::kModalMay;
    const char *rule = may ? "modal-may" : "modal-can";
    Concept s = SubjectConcept(subject, rule);
    Axiom ax = Axiom::Equivalent(s, Concept::Exists(may ? "mayBe" : "canBecome", object.expr));
    std::string o = object.label;
    ax.Annotate("probability", may ? "Pr(" + o + "(x), t_pr') > 0"
                                   : "Pr(" + o + "(x), t_pr') > 0; t_pr' > t_pr; Pr(" + o +
                                         "(x), t_pr) = 0");
    Emit(std::move(ax), rule);
  }

  std::string NowIndividual() {
    std::string name = "Now_";
    for (char c : ctx_.clock) {
      if (std::isalnum(static_cast<unsigned char>(c))) name += c;
    }
    return name;
  }

  Concept Duration(const TemporalCell &t) {
    auto it = TimeUnits().find(ToLower(t.unit));
    if (it == TimeUnits().end()) Unsupported("time unit '" + t.unit + "'");
    return Concept::And({Concept::Atom(it->second.cls), Concept::Atom("DurationDescription"),
                         Concept::DataValue(it->second.role, Literal{std::to_string(t.amount),
                                                                     Datatype::kDecimal})});
  }

  // Instant ⊓ ∃inDateTime.{i}
  static Concept InstantAt(const std::string &individual) {
    return Concept::And({Concept::Atom("Instant"),
                         Concept::Exists("inDateTime", Concept::Nominal(individual))});
  }

  std::string PastInstant(std::string_view rule) {
    std::string name = "PastInstant_" + std::to_string(++ctx_.instant_counter);
    Axiom a = Axiom::ClassAssertion(Concept::Atom("Instant"), name);
    a.Annotate("constraint", name + " < t_pr (" + ctx_.clock + ")");
    Emit(std::move(a), rule);
    return name;
  }

  void Tense(const std::optional<QuantifierCell> &q, const Entity &e, const Term &object,
             const std::optional<TemporalCell> &temporal) {
    RequirePlain(q, IsaKind::kTensePast);
    Term subject = Describe(e);
    const char *rule = !temporal ? "tense-past"
                       : temporal->form == TemporalCell::Form::kAgo ? "tense-ago"
                                                                    : "tense-for";
    Concept s = SubjectConcept(subject, rule);
    Concept interval;
    if (!temporal) {
      std::string past = PastInstant(rule);
      interval = Concept::And({Concept::Atom("ProperInterval"),
                               Concept::Exists("hasEnd", InstantAt(past))});
    } else if (temporal->form == TemporalCell::Form::kAgo) {
      std::string now = NowIndividual();
      Concept duration = Duration(*temporal);
      Emit(Axiom::ClassAssertion(Concept::Atom("Instant"), now), rule);
      Emit(Axiom::DataAssertion("inXSDDateTime", now, Literal{ctx_.clock, Datatype::kDateTime}),
           rule);
      Concept meets = Concept::And({Concept::Atom("ProperInterval"),
                                    Concept::Exists("hasEnd", InstantAt(now)),
                                    Concept::Exists("hasDurationDescription", duration)});
      interval = Concept::And({Concept::Atom("ProperInterval"),
                               Concept::Exists("intervalMeets", meets)});
    } else {
      Concept duration = Duration(*temporal);
      std::string past = PastInstant(rule);
      interval = Concept::And({Concept::Atom("ProperInterval"),
                               Concept::Exists("hasEnd", InstantAt(past)),
                               Concept::Exists("hasDurationDescription", duration)});
    }
    Emit(Axiom::SubClassOf(s, Concept::And({object.expr,
                                            Concept::Exists("isTrueFor", interval)})),
         rule);
  }

  TranslationContext &ctx_;
  const SourceId &source_;
  std::vector<Axiom> out_;
  std::vector<Token> subject_head_;
};

// Named parents from a told axiom right-hand side.
void NamedParts(const Concept &c, std::vector<std::string> &out) {
  if (c.kind == Concept::Kind::kAtomic) {
    out.push_back(c.name);
  } else if (c.kind == Concept::Kind::kAnd) {
    for (const Concept &a : c.args) {
      if (a.kind == Concept::Kind::kAtomic) out.push_back(a.name);
    }
  }
}

std::set<std::string> Reach(const std::map<std::string, std::set<std::string>> &edges,
                            const std::string &start) {
  std::set<std::string> seen;
  std::vector<std::string> stack{start};
  while (!stack.empty()) {
    std::string n = stack.back();
    stack.pop_back();
    auto it = edges.find(n);
    if (it == edges.end()) continue;
    for (const std::string &m : it->second) {
      if (seen.insert(m).second) stack.push_back(m);
    }
  }
  return seen;
}

}  // namespace

bool IsIsoDateTime(std::string_view s) {
  static const std::regex kIso(
      R"((\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})(\.\d+)?(Z|[+-](\d{2}):(\d{2}))?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(s.begin(), s.end(), m, kIso)) return false;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  int year = num(1), month = num(2), day = num(3);
  if (month < 1 || month > 12 || day < 1) return false;
  static constexpr int kDays[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  int max_day = month == 2 && !leap ? 28 : kDays[month - 1];
  if (day > max_day) return false;
  if (num(4) > 23 || num(5) > 59 || num(6) > 60) return false;
  if (m[9].matched && (num(9) > 23 || num(10) > 59)) return false;
  return true;
}

TranslationContext::TranslationContext(const Lexicon &lex, std::string clock_value)
    : lexicon(&lex), clock(std::move(clock_value)) {}

int64_t TranslationContext::Next(std::map<std::string, int64_t> &counters,
                                 const std::string &key) {
  return ++counters[key];
}

std::string MakeLabel(const std::vector<std::string> &parts, std::optional<NerClass> ner) {
  std::string label = CamelCase(parts);
  if (label.empty()) {
    throw Error(ErrorCode::kLabelingFailure, "no label characters in '" + Join(parts, " ") + "'");
  }
  if (ner) label += NerClassName(*ner);
  return label;
}

std::vector<Axiom> ModificationAxioms(const Entity &e, const Lexicon &lex) {
  std::vector<Axiom> out;
  size_t k = e.modifiers.size();
  if (k == 0) return out;
  std::vector<std::string> head = e.HeadWords();
  std::string s = MakeLabel(head);
  // chain[i] = M_i ... M_k S
  std::vector<std::string> chain(k);
  for (size_t i = 0; i < k; ++i) {
    std::vector<std::string> words = Lexemes(
        std::vector<Token>(e.modifiers.begin() + static_cast<std::ptrdiff_t>(i), e.modifiers.end()));
    words.insert(words.end(), head.begin(), head.end());
    chain[i] = MakeLabel(words);
  }
  out.push_back(
      Tagged(Axiom::SubClassOf(Concept::Atom(chain[k - 1]), Concept::Atom(s)),
             "forward-modification"));
  for (size_t i = 0; i + 1 < k; ++i) {
    std::vector<std::string> mi = {e.modifiers[i].lexeme};
    mi.insert(mi.end(), head.begin(), head.end());
    out.push_back(Tagged(Axiom::SubClassOf(Concept::Atom(chain[i]), Concept::Atom(chain[i + 1])),
                         "nested-modification"));
    out.push_back(Tagged(Axiom::SubClassOf(Concept::Atom(chain[i]), Concept::Atom(MakeLabel(mi))),
                         "nested-modification"));
  }
  for (size_t i = 0; i < k; ++i) {
    const Token &m = e.modifiers[i];
    std::string mod = MakeLabel({m.lexeme});
    std::vector<std::string> mi = {m.lexeme};
    mi.insert(mi.end(), head.begin(), head.end());
    std::string ms = MakeLabel(mi);
    if (m.tag == "JJ") {
      out.push_back(Tagged(Axiom::SubClassOf(Concept::Atom(ms), AttributeThing(mod)),
                           "backward-modification"));
      out.push_back(Tagged(AttributeDefinition(mod), "backward-modification"));
    } else if (m.tag == "NN" && LookupHypernym(lex, ms, mod)) {
      out.push_back(Tagged(Axiom::SubClassOf(Concept::Atom(ms), Concept::Atom(mod)),
                           "backward-nn"));
    }
  }
  return out;
}

std::vector<Axiom> Translate(const NssInstance &nss, TranslationContext &ctx,
                             const SourceId &source) {
  return Translator(ctx, source).Run(nss);
}

std::vector<Axiom> OnlyDisjointnessAxioms(const KnowledgeBase &kb,
                                          const TranslationContext &ctx) {
  std::map<std::string, std::set<std::string>> up, down;
  auto link = [&](const std::string &child, const Concept &parent) {
    std::vector<std::string> parents;
    NamedParts(parent, parents);
    for (const std::string &p : parents) {
      if (p == child) continue;
      up[child].insert(p);
      down[p].insert(child);
    }
  };
  for (const Axiom *a : kb.Tbox()) {
    if (a->kind == Axiom::Kind::kSubClassOf && a->lhs.kind == Concept::Kind::kAtomic) {
      link(a->lhs.name, a->rhs);
    } else if (a->kind == Axiom::Kind::kEquivalentClasses) {
      if (a->lhs.kind == Concept::Kind::kAtomic) link(a->lhs.name, a->rhs);
      if (a->rhs.kind == Concept::Kind::kAtomic) link(a->rhs.name, a->lhs);
    }
  }
  std::vector<Axiom> out;
  for (const OnlyConstraint &c : ctx.only_constraints) {
    std::set<std::string> excluded = Reach(up, c.subject);
    for (const std::string &x : Reach(up, c.object)) excluded.insert(x);
    for (const std::string &x : Reach(down, c.object)) excluded.insert(x);
    excluded.insert(c.subject);
    excluded.insert(c.object);
    for (const std::string &x : kb.concepts()) {
      if (excluded.count(x) || Primitives::IsConcept(x)) continue;
      Axiom a = Axiom::Equivalent(
          Concept::And({Concept::Atom(x), Concept::Atom(c.object)}), Concept::Bottom());
      a.Annotate(std::string(kRuleAnnotation), "only-disjointness");
      if (!c.source.document.empty() || c.source.line > 0) {
        a.Annotate(std::string(kSourceAnnotation), c.source.ToString());
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace isaowl
