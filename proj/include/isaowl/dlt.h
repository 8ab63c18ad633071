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

#ifndef ISAOWL_DLT_H_
#define ISAOWL_DLT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isaowl/knowledge_base.h"
#include "isaowl/lexicon.h"
#include "isaowl/nss.h"
#include "isaowl/token.h"

namespace isaowl {

inline constexpr std::string_view kDefaultClock = "2000-01-01T00:00:00Z";

// Checks YYYY-MM-DDThh:mm:ss with optional fraction and zone.
bool IsIsoDateTime(std::string_view s);

// A pending "Only S is O" constraint for the disjointness post-pass.
struct OnlyConstraint {
  std::string subject;
  std::string object;
  SourceId source;
};

// Mutable state threaded through a translation run. Counters only grow.
struct TranslationContext {
  explicit TranslationContext(const Lexicon &lex, std::string clock = std::string(kDefaultClock));

  const Lexicon *lexicon;
  // Subject label -> number of group instances issued so far.
  std::map<std::string, int64_t> group_counters;
  // Object label -> number of "only" contexts issued so far.
  std::map<std::string, int64_t> context_counters;
  int64_t instant_counter = 0;
  // Current time t_pr, fixed for the run.
  std::string clock;
  std::vector<std::string> warnings;
  // Subject label -> existential conjuncts accumulated by holonymy.
  std::map<std::string, std::vector<Concept>> holonymy;
  std::vector<OnlyConstraint> only_constraints;

  // Increments and returns the counter for `key`.
  static int64_t Next(std::map<std::string, int64_t> &counters, const std::string &key);
};

// CamelCase of the parts, followed by the NER class name when given.
// Throws Error(kLabelingFailure) when nothing alphanumeric remains.
std::string MakeLabel(const std::vector<std::string> &parts,
                      std::optional<NerClass> ner = std::nullopt);

// Forward, nested and backward modification axioms for a common-noun entity
// (empty for an entity without modifiers).
std::vector<Axiom> ModificationAxioms(const Entity &e, const Lexicon &lex);

// Translates one instance (complex instances are decomposed first). Axioms
// carry "rule" and, when `source` is set, "source" annotations. Throws
// Error(kUnsupportedPattern) for forms without a rule and
// Error(kLabelingFailure) when a label cannot be built.
std::vector<Axiom> Translate(const NssInstance &nss, TranslationContext &ctx,
                             const SourceId &source = {});

// (X ⊓ O) ≡ ⊥ for every named, non-primitive X in `kb` that is neither O,
// the constrained subject, a told ancestor of the subject, nor a told
// ancestor or descendant of O.
std::vector<Axiom> OnlyDisjointnessAxioms(const KnowledgeBase &kb,
                                          const TranslationContext &ctx);

}  // namespace isaowl

#endif  // ISAOWL_DLT_H_
