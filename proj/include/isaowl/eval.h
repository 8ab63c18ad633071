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

#ifndef ISAOWL_EVAL_H_
#define ISAOWL_EVAL_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isaowl/rational.h"
#include "isaowl/reasoner.h"
#include "json.hpp"

namespace isaowl {

struct LexicalScores {
  int64_t learned = 0;
  int64_t gold = 0;
  int64_t common = 0;
  std::optional<Rational> lp;  // nullopt when `learned` is empty
  std::optional<Rational> lr;  // nullopt when `gold` is empty
};

// Labels are matched by LabelKey.
LexicalScores ComputeLexicalScores(const std::set<std::string> &learned,
                                   const std::set<std::string> &gold);

struct IimTerm {
  std::string label;  // LabelKey of the concept
  int64_t learned = 0;  // |II_l|, 0 when absent from the learned graph
  int64_t gold = 0;     // |II_gs|, 0 when absent from the gold graph
  int64_t common = 0;   // |II_l ∩ II_gs|
};

struct IimReport {
  bool include_top = false;
  int64_t c_learned = 0;
  int64_t c_gold = 0;
  int64_t c_common = 0;
  int64_t numerator = 0;       // Σ_{CC} |II_l ∩ II_gs|
  int64_t den_p = 0;           // Σ_{C_l} |II_l|
  int64_t den_r = 0;           // Σ_{C_gs} |II_gs|
  int64_t den_op = 0;          // Σ_{CC} |II_l|
  int64_t den_or = 0;          // Σ_{CC} |II_gs|
  std::optional<Rational> iim_p, iim_r, iim_op, iim_or;
  LexicalScores lexical;
  std::vector<IimTerm> terms;  // sorted by label
};

// Concept labels of `g` used for evaluation (owl:Thing only if asked).
std::set<std::string> EvaluatedLabels(const TaxonomyGraph &g, bool include_top);

// Throws Error(kEmptyOntology) when either graph has no evaluated concept.
IimReport ComputeIim(const TaxonomyGraph &learned, const TaxonomyGraph &gold,
                     bool include_top = false);

nlohmann::json IimReportToJson(const IimReport &r);

}  // namespace isaowl

#endif  // ISAOWL_EVAL_H_
