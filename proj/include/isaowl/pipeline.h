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

#ifndef ISAOWL_PIPELINE_H_
#define ISAOWL_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isaowl/dlt.h"
#include "isaowl/knowledge_base.h"
#include "isaowl/lexicon.h"
#include "isaowl/nss.h"
#include "isaowl/reasoner.h"
#include "isaowl/simplify.h"
#include "isaowl/token.h"
#include "json.hpp"

namespace isaowl {

enum class InputMode { kRaw, kTagged };

// One sentence per non-blank line; lines starting with '#' are skipped.
// Sources carry `document` and the 1-based line number.
std::vector<TaggedSentence> ReadCorpus(std::string_view text, const std::string &document,
                                       InputMode mode, const Lexicon &lex);

// A sentence that could not be processed by an earlier stage.
struct StageError {
  std::string code;
  std::string message;
  bool operator==(const StageError &) const = default;
};

struct SimpleRecord {
  SourceId source;
  std::variant<TaggedSentence, StageError> value;
  bool ok() const { return std::holds_alternative<TaggedSentence>(value); }
};

struct FitRecord {
  SourceId source;
  std::variant<FitOutcome, StageError> value;
  bool ok() const { return std::holds_alternative<FitOutcome>(value); }
};

// Stages run sentence by sentence; `jobs` > 1 spreads the work over
// threads with output order unchanged.
std::vector<SimpleRecord> RunSimplify(const std::vector<TaggedSentence> &corpus,
                                      const Lexicon &lex, const std::vector<RewriteRule> &rules,
                                      int jobs = 1);
std::vector<FitRecord> RunFit(const std::vector<SimpleRecord> &simple, const Lexicon &lex,
                              int jobs = 1);
CharacterizationCounts CountFits(const std::vector<FitRecord> &fits);

struct TranslationError {
  SourceId source;
  StageError error;
};

struct TranslateResult {
  KnowledgeBase kb;
  int64_t translated = 0;  // instances that produced axioms
  std::vector<TranslationError> errors;
  std::vector<std::string> warnings;
};

// Sequential: counters make numbering depend on sentence order. Ends with
// the disjointness post-pass for "only" sentences.
TranslateResult RunTranslate(const std::vector<FitRecord> &fits, const Lexicon &lex,
                             const std::string &clock);

struct StageTimings {
  double simplify_ms = 0;
  double fit_ms = 0;
  double translate_ms = 0;
  double classify_ms = 0;
};

struct LearnResult {
  int64_t input_sentences = 0;
  std::vector<SimpleRecord> simple;
  std::vector<FitRecord> fits;
  CharacterizationCounts counts;
  TranslateResult translation;
  TaxonomyGraph taxonomy;
  StageTimings timings;
};

struct LearnOptions {
  std::string clock = std::string(kDefaultClock);
  int jobs = 1;
};

LearnResult Learn(const std::vector<TaggedSentence> &corpus, const Lexicon &lex,
                  const std::vector<RewriteRule> &rules, const LearnOptions &options);

nlohmann::json ManifestJson(const LearnResult &r, const LearnOptions &options);

// Line-oriented JSON for the intermediate stages.
nlohmann::json SimpleRecordToJson(const SimpleRecord &r);
SimpleRecord SimpleRecordFromJson(const nlohmann::json &j);
nlohmann::json FitRecordToJson(const FitRecord &r);
FitRecord FitRecordFromJson(const nlohmann::json &j);
nlohmann::json CountsToJson(const CharacterizationCounts &c);

// Parses JSON lines, skipping blank lines and objects with a "summary" key.
// Throws Error(kFormatMismatch) with the line number on malformed input.
std::vector<nlohmann::json> ReadJsonLines(std::string_view text);

}  // namespace isaowl

#endif  // ISAOWL_PIPELINE_H_
