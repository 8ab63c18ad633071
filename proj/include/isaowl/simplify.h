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

#ifndef ISAOWL_SIMPLIFY_H_
#define ISAOWL_SIMPLIFY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isaowl/lexicon.h"
#include "isaowl/token.h"

namespace isaowl {

inline constexpr int kMaxRewriteDepth = 8;

// One element of a rule pattern. Literals match lower-cased lexemes; captures
// bind token spans.
struct PatternElement {
  enum class Kind { kLiteral, kNounPhrase, kList, kTag, kRest };
  Kind kind = Kind::kLiteral;
  bool optional = false;
  // kLiteral: alternative word sequences.
  std::vector<std::vector<std::string>> alternatives;
  // kTag: the required Penn tag.
  std::string tag;
  // Capture slot; 0 means the span is matched but not bound.
  int slot = 0;
};

// One output template item: a literal tagged word or a capture reference.
struct ProductionItem {
  bool is_capture = false;
  TaggedWord word;
  int slot = 0;
  bool distribute = false;  // `$N*`: one output per list item
};

struct RewriteRule {
  std::string id;
  std::string pattern_text;
  std::vector<PatternElement> pattern;
  std::vector<std::vector<ProductionItem>> productions;
};

// A bound capture: the token span and, for list captures, its items.
struct Capture {
  size_t begin = 0;
  size_t end = 0;
  std::vector<std::vector<Token>> items;
};

// Parses one rule. Throws Error(kInvalidRule) on syntax errors, unbound
// capture references, or a rule whose own output re-matches its pattern.
RewriteRule ParseRule(std::string_view id, std::string_view pattern, std::string_view productions);

// Rules from `id<TAB>pattern<TAB>productions` text ('#' comments allowed).
std::vector<RewriteRule> ParseRules(std::string_view text, std::string_view origin = "rules");
std::vector<RewriteRule> LoadRules(const std::string &path);

// The built-in registry: the seven syntactic rewrites.
const std::vector<RewriteRule> &DefaultRules();
std::string_view DefaultRulesText();

// Matches `rule` against the whole sentence; returns slot -> capture.
std::optional<std::map<int, Capture>> MatchRule(const RewriteRule &rule,
                                                const std::vector<Token> &tokens);

// Applies the first matching rule and re-applies the rule list to each
// production, up to kMaxRewriteDepth. Productions are re-normalized with the
// lexicon. No match yields the input alone.
std::vector<TaggedSentence> ApplyPatterns(const TaggedSentence &s,
                                          const std::vector<RewriteRule> &rules,
                                          const Lexicon &lex);

// Distributes conjunctive subject/object lists and splits relative clauses
// into separate sentences, subject-major. "either ... or" lists stay whole.
// Throws Error(kUnsaturatedSentence) when both subject and object carry a
// relative clause.
std::vector<TaggedSentence> SplitCompound(const TaggedSentence &s, const Lexicon &lex);

// Pattern rewriting and compound splitting to a fixpoint.
std::vector<TaggedSentence> Simplify(const TaggedSentence &s, const std::vector<RewriteRule> &rules,
                                     const Lexicon &lex);

bool IsClauseWord(std::string_view lower_lexeme);
// IS-A lexemes that open a clause without a relative pronoun ("being").
bool IsNullClauseIsa(const IsaEntry &entry);

}  // namespace isaowl

#endif  // ISAOWL_SIMPLIFY_H_
