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

#ifndef ISAOWL_NSS_H_
#define ISAOWL_NSS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isaowl/lexicon.h"
#include "isaowl/rational.h"
#include "isaowl/token.h"
#include "json.hpp"

namespace isaowl {

enum class NssKind { kSimple, kComplex, kCompound };
std::string_view NssKindName(NssKind k);

enum class ClauseKind { kNone, kNull, kWhich, kWho, kWhose, kWhom, kThat };
std::string_view ClauseKindName(ClauseKind k);

enum class ListKind { kSingle, kConjunction, kDisjunction };
std::string_view ListKindName(ListKind k);

// Template cells in reading order.
enum class Cell { kQ1, kM1, kS, kCl1, kIsa1, kQ2, kM2, kO1, kCl2, kIsa2, kQ3, kM3, kO2, kTemporal };
std::string_view CellName(Cell c);

struct QuantifierCell {
  std::vector<Token> tokens;
  QuantifierKind kind = QuantifierKind::kA;
  // Bound for at-least / at-most / exactly.
  std::optional<int64_t> count;
  // "at least CD of the ..."
  bool of_the = false;

  bool IsSpecial() const;
};

// One subject or object entity: modifiers followed by a head. A run of
// proper nouns forms a single multi-token head.
struct Entity {
  std::vector<Token> modifiers;
  std::vector<Token> head;

  bool IsProperNoun() const;
  // Tag class of the head: "NN", "NNP", "JJ", "RB" or "VBG".
  std::string HeadTag() const;
  std::vector<std::string> HeadWords() const;
};

// Entities with the connective tokens that precede each one
// (separators[0] is the leading "either", usually empty).
struct EntityList {
  ListKind kind = ListKind::kSingle;
  std::vector<Entity> entities;
  std::vector<std::vector<Token>> separators;

  bool empty() const { return entities.empty(); }
};

struct Phrase {
  std::optional<QuantifierCell> quantifier;
  EntityList list;

  bool empty() const { return !quantifier && list.empty(); }
};

struct IsaCell {
  std::vector<Token> tokens;
  IsaKind kind = IsaKind::kHyponymy;
};

struct ClauseCell {
  std::vector<Token> tokens;  // optional comma plus the clause word
  ClauseKind kind = ClauseKind::kNone;
};

// "CD UNIT ago" or "for CD UNIT" attached to the main predicate.
struct TemporalCell {
  enum class Form { kAgo, kFor };
  enum class Place { kAfterSubject, kEnd };
  Form form = Form::kAgo;
  Place place = Place::kEnd;
  std::vector<Token> tokens;
  int64_t amount = 0;
  std::string unit;  // singular lower-case unit lexeme, e.g. "year"
};

struct NssInstance {
  NssKind kind = NssKind::kSimple;
  Phrase subject;
  ClauseCell cl1;
  IsaCell isa1;
  Phrase object1;
  ClauseCell cl2;
  std::optional<IsaCell> isa2;
  Phrase object2;
  std::optional<TemporalCell> temporal;

  const std::optional<QuantifierCell> &q1() const { return subject.quantifier; }
  const std::optional<QuantifierCell> &q2() const { return object1.quantifier; }
  const std::optional<QuantifierCell> &q3() const { return object2.quantifier; }
};

enum class FitFailureReason { kCellTagMismatch, kNoIsaLexeme, kUnsaturated };
std::string_view FitFailureReasonName(FitFailureReason r);

struct FitFailure {
  FitFailureReason reason = FitFailureReason::kCellTagMismatch;
  size_t position = 0;  // first offending token
  std::string tag;
  std::string cell;
  std::string message;
};

struct FitOutcome {
  std::variant<NssInstance, FitFailure> result;
  SourceId source;

  bool ok() const { return std::holds_alternative<NssInstance>(result); }
  const NssInstance &instance() const { return std::get<NssInstance>(result); }
  const FitFailure &failure() const { return std::get<FitFailure>(result); }
};

FitOutcome FitTemplate(const TaggedSentence &s, const Lexicon &lex);

// Allowed tags per cell.
bool ModifierTagAllowed(std::string_view tag);
bool EntityTagAllowed(std::string_view tag);

// Independent re-check that every filled cell holds only allowed tags;
// returns the first violation.
std::optional<FitFailure> CheckCellTags(const NssInstance &nss);

// Filled cells concatenated in template order.
std::vector<Token> Reconstruct(const NssInstance &nss);

struct CharacterizationCounts {
  int64_t n = 0;          // sentences in the corpus
  int64_t n_fitted = 0;   // N_F
  int64_t n_correct = 0;  // N_CF
};

// Exact scores; nullopt when the denominator is zero.
struct CharacterizationScores {
  std::optional<Rational> cp;
  std::optional<Rational> cr;
};

CharacterizationScores ComputeCharacterization(const CharacterizationCounts &c);

// A fitted outcome counts as correct when it passes CheckCellTags and, if
// `gold` is given, its flag is set. `gold` must align with `outcomes`.
CharacterizationCounts CountOutcomes(const std::vector<FitOutcome> &outcomes,
                                     const std::vector<bool> *gold = nullptr);

nlohmann::json NssToJson(const NssInstance &nss);
NssInstance NssFromJson(const nlohmann::json &j);
nlohmann::json FitOutcomeToJson(const FitOutcome &o);
FitOutcome FitOutcomeFromJson(const nlohmann::json &j);

// Splits a complex instance into its two simple readings:
// subject clause -> (S isa1 O1), (S isa2 O2); object clause -> (S isa1 O1),
// (O1 isa2 O2). Simple and compound-simple instances come back unchanged.
std::vector<NssInstance> DecomposeComplex(const NssInstance &nss);

}  // namespace isaowl

#endif  // ISAOWL_NSS_H_
