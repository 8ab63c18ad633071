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

#include "isaowl/token.h"

#include <set>

#include "isaowl/error.h"
#include "isaowl/text.h"

namespace isaowl {

using nlohmann::json;

std::string Token::lower() const { return ToLower(lexeme); }

std::string SourceId::ToString() const { return document + ":" + std::to_string(line); }

std::string TaggedSentence::Text() const {
  std::vector<std::string> words;
  for (const Token &t : tokens) words.push_back(t.lexeme);
  return Join(words, " ");
}

std::string TaggedSentence::TaggedText() const {
  std::vector<std::string> words;
  for (const Token &t : tokens) words.push_back(t.lexeme + "_" + t.tag);
  return Join(words, " ");
}

std::string TaggedSentence::DebugText() const {
  std::vector<std::string> words;
  for (const Token &t : tokens) {
    std::vector<std::string> flags;
    if (t.flags.plural) flags.push_back("PLURAL");
    if (t.flags.unit) flags.push_back("UNIT(" + std::string(DimensionName(*t.flags.unit)) + ")");
    if (t.flags.dim_adj) {
      flags.push_back("DIM_ADJ(" + std::string(DimensionName(t.flags.dim_adj->first)) + "," +
                      std::string(SenseName(t.flags.dim_adj->second)) + ")");
    }
    if (t.flags.numeral) flags.push_back("NUMERAL(" + std::to_string(*t.flags.numeral) + ")");
    std::string w = t.lexeme + "_" + t.tag;
    if (!flags.empty()) w += "{" + Join(flags, ",") + "}";
    words.push_back(w);
  }
  return Join(words, " ");
}

std::vector<std::string> TaggedSentence::LowerLexemes() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.lower());
  return out;
}

bool IsPennTag(std::string_view tag) {
  static const std::set<std::string, std::less<>> kTags = {
      "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",  "MD",
      "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS",
      "RP",  "SYM", "TO",   "UH",  "VB",  "VBD", "VBG", "VBN", "VBP", "VBZ", "WDT",
      "WP",  "WP$", "WRB",  ",",   ".",   ":",   "``",  "''",  "-LRB-", "-RRB-", "#", "$"};
  return kTags.count(tag) > 0;
}

json SourceToJson(const SourceId &s) { return json{{"doc", s.document}, {"line", s.line}}; }

SourceId SourceFromJson(const json &j) {
  SourceId s;
  s.document = j.value("doc", "");
  s.line = j.value("line", 0);
  return s;
}

json TokenToJson(const Token &t) {
  json j = {{"w", t.lexeme}, {"t", t.tag}};
  if (t.flags.plural) j["plural"] = true;
  if (t.flags.unit) j["unit"] = std::string(DimensionName(*t.flags.unit));
  if (t.flags.dim_adj) {
    j["dim_adj"] = {std::string(DimensionName(t.flags.dim_adj->first)),
                    std::string(SenseName(t.flags.dim_adj->second))};
  }
  if (t.flags.numeral) j["numeral"] = *t.flags.numeral;
  return j;
}

Token TokenFromJson(const json &j) {
  if (!j.is_object() || !j.contains("w") || !j.contains("t")) {
    throw Error(ErrorCode::kFormatMismatch, "token record needs w and t");
  }
  Token t;
  t.lexeme = j.at("w").get<std::string>();
  t.tag = j.at("t").get<std::string>();
  t.flags.plural = j.value("plural", false);
  if (j.contains("unit")) {
    auto d = ParseDimension(j.at("unit").get<std::string>());
    if (!d) throw Error(ErrorCode::kFormatMismatch, "bad unit dimension");
    t.flags.unit = *d;
  }
  if (j.contains("dim_adj")) {
    auto d = ParseDimension(j.at("dim_adj").at(0).get<std::string>());
    std::string sense = j.at("dim_adj").at(1).get<std::string>();
    if (!d || (sense != "min" && sense != "max")) {
      throw Error(ErrorCode::kFormatMismatch, "bad dim_adj");
    }
    t.flags.dim_adj = std::make_pair(*d, sense == "min" ? Sense::kMin : Sense::kMax);
  }
  if (j.contains("numeral")) t.flags.numeral = j.at("numeral").get<int64_t>();
  return t;
}

json SentenceToJson(const TaggedSentence &s) {
  json tokens = json::array();
  for (const Token &t : s.tokens) tokens.push_back(TokenToJson(t));
  return json{{"source", SourceToJson(s.source)}, {"tokens", tokens}};
}

TaggedSentence SentenceFromJson(const json &j) {
  if (!j.is_object() || !j.contains("tokens")) {
    throw Error(ErrorCode::kFormatMismatch, "sentence record needs tokens");
  }
  TaggedSentence s;
  if (j.contains("source")) s.source = SourceFromJson(j.at("source"));
  for (const json &t : j.at("tokens")) s.tokens.push_back(TokenFromJson(t));
  return s;
}

}  // namespace isaowl
