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

#ifndef ISAOWL_TOKEN_H_
#define ISAOWL_TOKEN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isaowl/lexicon.h"
#include "json.hpp"

namespace isaowl {

struct TokenFlags {
  bool plural = false;
  std::optional<Dimension> unit;
  std::optional<std::pair<Dimension, Sense>> dim_adj;
  std::optional<int64_t> numeral;

  bool operator==(const TokenFlags &) const = default;
};

struct Token {
  std::string lexeme;
  std::string tag;
  TokenFlags flags;

  std::string lower() const;
  bool operator==(const Token &) const = default;
};

// Where a sentence came from: document name and 1-based line.
struct SourceId {
  std::string document;
  int line = 0;

  std::string ToString() const;
  bool operator==(const SourceId &) const = default;
};

struct TaggedSentence {
  std::vector<Token> tokens;
  SourceId source;

  // Lexemes joined by single spaces.
  std::string Text() const;
  // The `lexeme_TAG` form, flags dropped.
  std::string TaggedText() const;
  // `lexeme_TAG{FLAG,...}` form for diagnostics and golden files.
  std::string DebugText() const;
  std::vector<std::string> LowerLexemes() const;

  bool operator==(const TaggedSentence &) const = default;
};

// True for tags of the Penn Treebank tag set (including punctuation tags).
bool IsPennTag(std::string_view tag);

nlohmann::json TokenToJson(const Token &t);
Token TokenFromJson(const nlohmann::json &j);
nlohmann::json SentenceToJson(const TaggedSentence &s);
TaggedSentence SentenceFromJson(const nlohmann::json &j);
nlohmann::json SourceToJson(const SourceId &s);
SourceId SourceFromJson(const nlohmann::json &j);

}  // namespace isaowl

#endif  // ISAOWL_TOKEN_H_
