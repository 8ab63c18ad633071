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

#include "isaowl/preprocess.h"

#include <cctype>

#include "isaowl/error.h"
#include "isaowl/text.h"

namespace isaowl {
namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool StartsUpper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

std::string MatchCase(std::string word, std::string_view model) {
  if (StartsUpper(model) && !word.empty()) {
    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  }
  return word;
}

bool IsVerbOrModal(std::string_view tag) { return tag.starts_with("VB") || tag == "MD"; }

std::vector<std::string> LowerLexemes(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.lower());
  return out;
}

// Replaces tokens[begin, end) by `canonical` unless they already spell it.
void Rewrite(std::vector<Token> &out, const std::vector<Token> &tokens, size_t begin, size_t end,
             const std::vector<TaggedWord> &canonical) {
  bool same = canonical.size() == end - begin;
  for (size_t k = 0; same && k < canonical.size(); ++k) {
    same = tokens[begin + k].lower() == ToLower(canonical[k].lexeme) &&
           tokens[begin + k].tag == canonical[k].tag;
  }
  if (same) {
    out.insert(out.end(), tokens.begin() + begin, tokens.begin() + end);
    return;
  }
  for (const TaggedWord &w : canonical) out.push_back(Token{w.lexeme, w.tag, {}});
}

// Value of a run of number words, or nullopt when `words` is not one.
std::optional<int64_t> NumberValue(const std::vector<int64_t> &values) {
  if (values.empty()) return std::nullopt;
  int64_t total = 0, current = 0;
  for (int64_t v : values) {
    if (v == 100) {
      current = (current == 0 ? 1 : current) * 100;
    } else if (v >= 1000) {
      total += (current == 0 ? 1 : current) * v;
      current = 0;
    } else {
      current += v;
    }
  }
  return total + current;
}

std::optional<int64_t> LookupNumberWord(const std::string &lower, const Lexicon &lex) {
  auto it = lex.number_words.find(lower);
  if (it != lex.number_words.end()) return it->second;
  return std::nullopt;
}

// Splits "thirty-seven" into its number-word parts when every part is one.
std::optional<std::vector<int64_t>> NumberParts(const std::string &lower, const Lexicon &lex) {
  std::vector<int64_t> values;
  for (const std::string &part : SplitOn(lower, '-')) {
    std::optional<int64_t> v = LookupNumberWord(part, lex);
    if (!v) return std::nullopt;
    values.push_back(*v);
  }
  return values;
}

std::string ThirdPersonSingular(const std::string &verb) {
  if (verb == "are" || verb == "am") return "is";
  if (verb == "were") return "was";
  if (verb == "have") return "has";
  if (EndsWith(verb, "s") || EndsWith(verb, "x") || EndsWith(verb, "z") || EndsWith(verb, "ch") ||
      EndsWith(verb, "sh") || EndsWith(verb, "o")) {
    return verb + "es";
  }
  return verb + "s";
}

}  // namespace

TaggedSentence ParseTagged(std::string_view line, const SourceId &source) {
  TaggedSentence s;
  s.source = source;
  std::vector<std::string> units = SplitWhitespace(line);
  for (size_t i = 0; i < units.size(); ++i) {
    const std::string &unit = units[i];
    size_t us = unit.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == unit.size()) {
      throw Error(ErrorCode::kMissingTag, "position " + std::to_string(i) + " ('" + unit + "')");
    }
    s.tokens.push_back(Token{unit.substr(0, us), unit.substr(us + 1), {}});
  }
  return s;
}

TaggedSentence TagRaw(std::string_view line, const Lexicon &lex, const SourceId &source) {
  std::vector<std::string> words;
  for (std::string w : SplitWhitespace(line)) {
    std::vector<std::string> trailing;
    while (!w.empty() && std::string_view(",.:;!?").find(w.back()) != std::string_view::npos) {
      trailing.insert(trailing.begin(), std::string(1, w.back()));
      w.pop_back();
    }
    if (EndsWith(ToLower(w), "'s") && w.size() > 2) {
      words.push_back(w.substr(0, w.size() - 2));
      words.push_back("'s");
    } else if (!w.empty()) {
      words.push_back(w);
    }
    words.insert(words.end(), trailing.begin(), trailing.end());
  }

  TaggedSentence s;
  s.source = source;
  for (size_t i = 0; i < words.size(); ++i) {
    const std::string &w = words[i];
    std::string lower = ToLower(w);
    std::string tag;
    if (w == ",") {
      tag = ",";
    } else if (w == "." || w == "!" || w == "?") {
      tag = ".";
    } else if (w == ":" || w == ";" || w == "-" || w == "--") {
      tag = ":";
    } else if (w == "'s") {
      tag = "POS";
    } else if (IsAllDigits(w) || NumberParts(lower, lex)) {
      tag = "CD";
    } else if (auto it = lex.tagger_words.find(lower);
               it != lex.tagger_words.end() &&
               (it->second == "JJ" || !(i > 0 && StartsUpper(w)))) {
      tag = it->second;
    } else if (lower.find('-') != std::string::npos && !LookupNer(lex, w)) {
      tag = "JJ";
    } else if (StartsUpper(w) && (i > 0 || LookupNer(lex, w))) {
      tag = "NNP";
    } else if (EndsWith(lower, "ing") && lower.size() > 4) {
      tag = "VBG";
    } else if (EndsWith(lower, "ed") && lower.size() > 3) {
      tag = "JJ";
    } else if (EndsWith(lower, "ly") && lower.size() > 3) {
      tag = "RB";
    } else if (EndsWith(lower, "ous") || EndsWith(lower, "ful") || EndsWith(lower, "ive") ||
               EndsWith(lower, "able") || EndsWith(lower, "ible") || EndsWith(lower, "less") ||
               EndsWith(lower, "ish")) {
      tag = "JJ";
    } else if (lex.plural_exceptions.count(lower) ||
               (EndsWith(lower, "s") && !EndsWith(lower, "ss") && !EndsWith(lower, "us") &&
                !EndsWith(lower, "is") && lower.size() > 3)) {
      tag = "NNS";
    } else {
      tag = "NN";
    }
    s.tokens.push_back(Token{w, tag, {}});
  }
  return s;
}

TaggedSentence StripTerminalPunctuation(const TaggedSentence &s) {
  TaggedSentence out = s;
  while (out.tokens.size() > 1 && out.tokens.back().tag == ".") out.tokens.pop_back();
  return out;
}

std::optional<std::string> SingularForm(std::string_view plural, const Lexicon &lex) {
  std::string word(plural);
  std::string lower = ToLower(word);
  if (auto it = lex.plural_exceptions.find(lower); it != lex.plural_exceptions.end()) {
    return MatchCase(it->second, word);
  }
  if (EndsWith(lower, "ies") && lower.size() > 4) return word.substr(0, word.size() - 3) + "y";
  if (EndsWith(lower, "sses") || EndsWith(lower, "shes") || EndsWith(lower, "ches") ||
      EndsWith(lower, "xes") || EndsWith(lower, "zzes")) {
    return word.substr(0, word.size() - 2);
  }
  if (EndsWith(lower, "ss") || EndsWith(lower, "us") || EndsWith(lower, "is")) return std::nullopt;
  if (EndsWith(lower, "s") && lower.size() > 1) return word.substr(0, word.size() - 1);
  return std::nullopt;
}

TaggedSentence Singularize(const TaggedSentence &s, const Lexicon &lex) {
  TaggedSentence out = s;
  for (Token &t : out.tokens) {
    if (t.tag == "NNS" || t.tag == "NNPS") {
      std::optional<std::string> singular = SingularForm(t.lexeme, lex);
      if (!singular) continue;
      t.lexeme = *singular;
      t.tag = t.tag == "NNS" ? "NN" : "NNP";
      t.flags.plural = true;
      continue;
    }
    std::string lower = t.lower();
    if (lower == "are" || lower == "am") {
      t.lexeme = MatchCase("is", t.lexeme);
      t.tag = "VBZ";
    } else if (lower == "were") {
      t.lexeme = MatchCase("was", t.lexeme);
      t.tag = "VBD";
    } else if (t.tag == "VBP") {
      t.lexeme = MatchCase(ThirdPersonSingular(lower), t.lexeme);
      t.tag = "VBZ";
    }
  }
  return out;
}

std::optional<IsaSpan> MatchIsaAt(const std::vector<Token> &tokens, size_t pos,
                                  const Lexicon &lex) {
  if (pos >= tokens.size() || !IsVerbOrModal(tokens[pos].tag)) return std::nullopt;
  auto [len, entry] = lex.isa_variants.LongestMatch(LowerLexemes(tokens), pos);
  if (len == 0) return std::nullopt;
  return IsaSpan{pos, pos + len, entry};
}

std::vector<IsaSpan> FindIsaSpans(const std::vector<Token> &tokens, const Lexicon &lex) {
  std::vector<IsaSpan> spans;
  size_t i = 0;
  while (i < tokens.size()) {
    if (std::optional<IsaSpan> m = MatchIsaAt(tokens, i, lex)) {
      spans.push_back(*m);
      i = m->end;
    } else {
      ++i;
    }
  }
  return spans;
}

std::optional<QuantifierSpan> MatchQuantifierAt(const std::vector<Token> &tokens, size_t pos,
                                                const Lexicon &lex) {
  auto [len, entry] = lex.quantifier_variants.LongestMatch(LowerLexemes(tokens), pos);
  if (len == 0) return std::nullopt;
  return QuantifierSpan{pos, pos + len, entry};
}

TaggedSentence NormalizeLexical(const TaggedSentence &s, const Lexicon &lex) {
  const std::vector<Token> &in = s.tokens;
  std::vector<std::string> lower = LowerLexemes(in);
  std::vector<Token> out;
  size_t i = 0;
  while (i < in.size()) {
    // Number words, possibly joined by "and".
    if (auto first = NumberParts(lower[i], lex)) {
      std::vector<int64_t> values = *first;
      size_t j = i + 1;
      while (j < in.size()) {
        if (auto more = NumberParts(lower[j], lex)) {
          values.insert(values.end(), more->begin(), more->end());
          ++j;
        } else if (lower[j] == "and" && j + 1 < in.size() && NumberParts(lower[j + 1], lex)) {
          ++j;
        } else {
          break;
        }
      }
      Token t{std::to_string(*NumberValue(values)), "CD", {}};
      t.flags.numeral = *NumberValue(values);
      out.push_back(t);
      i = j;
      continue;
    }
    if (std::optional<IsaSpan> m = MatchIsaAt(in, i, lex)) {
      Rewrite(out, in, m->begin, m->end, m->entry->canonical);
      i = m->end;
      continue;
    }
    if (std::optional<QuantifierSpan> q = MatchQuantifierAt(in, i, lex)) {
      Rewrite(out, in, q->begin, q->end, q->entry->canonical);
      i = q->end;
      continue;
    }
    if (in[i].tag.starts_with("NN") || in[i].tag == "JJ") {
      auto [len, canonical] = lex.synonyms.LongestMatch(lower, i);
      if (len > 0) {
        std::vector<std::string> matched(lower.begin() + i, lower.begin() + i + len);
        if (matched == *canonical) {
          out.insert(out.end(), in.begin() + i, in.begin() + i + len);
        } else {
          const Token &head = in[i + len - 1];
          for (size_t k = 0; k < canonical->size(); ++k) {
            bool last = k + 1 == canonical->size();
            out.push_back(Token{(*canonical)[k], last ? head.tag : "NN",
                                last ? head.flags : TokenFlags{}});
          }
        }
        i += len;
        continue;
      }
    }
    Token t = in[i];
    if (IsAllDigits(t.lexeme) && t.lexeme.size() <= 18) t.flags.numeral = std::stoll(t.lexeme);
    out.push_back(t);
    ++i;
  }
  TaggedSentence result;
  result.tokens = std::move(out);
  result.source = s.source;
  return result;
}

TaggedSentence AnnotateSpecial(const TaggedSentence &s, const Lexicon &lex) {
  TaggedSentence out = s;
  for (Token &t : out.tokens) {
    std::string lower = t.lower();
    if (t.tag.starts_with("NN")) {
      if (auto it = lex.unit_map.find(lower); it != lex.unit_map.end()) t.flags.unit = it->second;
    }
    if (t.tag.starts_with("JJ")) {
      if (auto it = lex.dimension_adjectives.find(lower); it != lex.dimension_adjectives.end()) {
        t.flags.dim_adj = it->second;
      }
    }
  }
  return out;
}

TaggedSentence Preprocess(const TaggedSentence &s, const Lexicon &lex) {
  return AnnotateSpecial(NormalizeLexical(Singularize(StripTerminalPunctuation(s), lex), lex),
                         lex);
}

}  // namespace isaowl
