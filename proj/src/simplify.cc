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

#include "isaowl/simplify.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "isaowl/error.h"
#include "isaowl/preprocess.h"
#include "isaowl/text.h"

namespace isaowl {
namespace {

constexpr std::string_view kDefaultRules =
#include "default_rules.inc"
    ;

[[noreturn]] void InvalidRule(std::string_view id, const std::string &why) {
  throw Error(ErrorCode::kInvalidRule, std::string(id) + ": " + why);
}

bool IsNounTag(std::string_view tag) { return tag.starts_with("NN"); }

bool IsNounPhraseTag(std::string_view tag) {
  return IsNounTag(tag) || tag == "JJ" || tag == "VBG" || tag == "CD";
}

bool IsListSeparator(const Token &t) {
  std::string w = t.lower();
  return w == "," || w == "and" || w == "or";
}

// ---------------------------------------------------------------------------
// Pattern DSL parsing.

std::vector<std::string> PatternUnits(std::string_view text, std::string_view id) {
  std::vector<std::string> units;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    if (text[i] == '(') {
      j = text.find(')', i);
      if (j == std::string_view::npos) InvalidRule(id, "unbalanced parenthesis");
      ++j;
      if (j < text.size() && text[j] == '?') ++j;
    } else {
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    }
    units.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return units;
}

PatternElement ParsePatternUnit(std::string unit, std::string_view id) {
  PatternElement e;
  if (unit.size() > 1 && unit.back() == '?') {
    e.optional = true;
    unit.pop_back();
  }
  if (unit.front() == '(') {
    std::string body = unit.substr(1, unit.size() - 2);
    for (const std::string &alt : SplitOn(body, '|')) {
      std::vector<std::string> words = SplitWhitespace(ToLower(alt));
      if (words.empty()) InvalidRule(id, "empty alternative");
      e.alternatives.push_back(words);
    }
    return e;
  }
  if (unit.front() == '$') {
    size_t k = 1;
    while (k < unit.size() && std::isalpha(static_cast<unsigned char>(unit[k]))) ++k;
    std::string kind = unit.substr(1, k - 1);
    std::string digits = unit.substr(k);
    if (kind.empty() || (!digits.empty() && !IsAllDigits(digits))) {
      InvalidRule(id, "bad capture '" + unit + "'");
    }
    e.slot = digits.empty() ? 0 : std::stoi(digits);
    if (kind == "NP") {
      e.kind = PatternElement::Kind::kNounPhrase;
    } else if (kind == "LIST") {
      e.kind = PatternElement::Kind::kList;
    } else if (kind == "REST") {
      e.kind = PatternElement::Kind::kRest;
    } else if (IsPennTag(kind)) {
      e.kind = PatternElement::Kind::kTag;
      e.tag = kind;
    } else {
      InvalidRule(id, "unknown capture kind '" + kind + "'");
    }
    return e;
  }
  e.alternatives.push_back({ToLower(unit)});
  return e;
}

std::vector<ProductionItem> ParseProduction(std::string_view text, std::string_view id) {
  std::vector<ProductionItem> items;
  for (const std::string &unit : SplitWhitespace(text)) {
    ProductionItem item;
    if (unit.front() == '$') {
      std::string digits = unit.substr(1);
      if (!digits.empty() && digits.back() == '*') {
        item.distribute = true;
        digits.pop_back();
      }
      if (!IsAllDigits(digits)) InvalidRule(id, "bad reference '" + unit + "'");
      item.is_capture = true;
      item.slot = std::stoi(digits);
    } else {
      size_t us = unit.rfind('_');
      if (us == std::string::npos || us == 0 || us + 1 == unit.size()) {
        InvalidRule(id, "production literal needs a tag: '" + unit + "'");
      }
      item.word = {unit.substr(0, us), unit.substr(us + 1)};
    }
    items.push_back(item);
  }
  if (items.empty()) InvalidRule(id, "empty production");
  return items;
}

// ---------------------------------------------------------------------------
// Matching.

// Candidate list parses starting at `pos`, longest first.
std::vector<Capture> ListCandidates(const std::vector<Token> &toks, size_t pos) {
  std::vector<Capture> out;
  Capture current;
  current.begin = pos;
  size_t cur = pos;
  while (cur < toks.size()) {
    size_t start = cur;
    if (toks[start].tag == "DT") ++start;
    size_t j = start;
    while (j < toks.size() && IsNounPhraseTag(toks[j].tag)) ++j;
    while (j > start && !IsNounTag(toks[j - 1].tag)) --j;
    if (j == start) break;
    current.items.emplace_back(toks.begin() + start, toks.begin() + j);
    current.end = j;
    out.push_back(current);
    size_t k = j;
    if (k < toks.size() && toks[k].lexeme == ",") ++k;
    if (k < toks.size() && (toks[k].lower() == "and" || toks[k].lower() == "or")) ++k;
    if (k == j) break;
    cur = k;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

class Matcher {
 public:
  Matcher(const RewriteRule &rule, const std::vector<Token> &toks) : rule_(rule), toks_(toks) {}

  bool Run() { return Match(0, 0); }
  std::map<int, Capture> &captures() { return caps_; }

 private:
  bool Bind(const PatternElement &e, Capture cap, size_t ei, size_t next) {
    if (e.slot != 0) caps_[e.slot] = std::move(cap);
    if (Match(ei + 1, next)) return true;
    if (e.slot != 0) caps_.erase(e.slot);
    return false;
  }

  bool Match(size_t ei, size_t pos) {
    if (ei == rule_.pattern.size()) return pos == toks_.size();
    const PatternElement &e = rule_.pattern[ei];
    if (MatchElement(e, ei, pos)) return true;
    return e.optional && Match(ei + 1, pos);
  }

  bool MatchElement(const PatternElement &e, size_t ei, size_t pos) {
    const size_t n = toks_.size();
    switch (e.kind) {
      case PatternElement::Kind::kLiteral:
        for (const auto &alt : e.alternatives) {
          if (pos + alt.size() > n) continue;
          bool ok = true;
          for (size_t k = 0; ok && k < alt.size(); ++k) ok = toks_[pos + k].lower() == alt[k];
          if (ok && Match(ei + 1, pos + alt.size())) return true;
        }
        return false;
      case PatternElement::Kind::kTag:
        if (pos < n && toks_[pos].tag == e.tag) return Bind(e, {pos, pos + 1, {}}, ei, pos + 1);
        return false;
      case PatternElement::Kind::kNounPhrase: {
        size_t j = pos;
        while (j < n && IsNounPhraseTag(toks_[j].tag)) ++j;
        for (; j > pos; --j) {
          if (!IsNounTag(toks_[j - 1].tag)) continue;
          if (Bind(e, {pos, j, {}}, ei, j)) return true;
        }
        return false;
      }
      case PatternElement::Kind::kRest:
        for (size_t j = n; j > pos; --j) {
          if (Bind(e, {pos, j, {}}, ei, j)) return true;
        }
        return false;
      case PatternElement::Kind::kList:
        for (Capture &cap : ListCandidates(toks_, pos)) {
          size_t end = cap.end;
          if (Bind(e, std::move(cap), ei, end)) return true;
        }
        return false;
    }
    return false;
  }

  const RewriteRule &rule_;
  const std::vector<Token> &toks_;
  std::map<int, Capture> caps_;
};

std::vector<std::vector<Token>> Instantiate(const RewriteRule &rule,
                                            const std::vector<Token> &toks,
                                            const std::map<int, Capture> &caps) {
  std::vector<std::vector<Token>> out;
  for (const auto &prod : rule.productions) {
    const ProductionItem *star = nullptr;
    for (const ProductionItem &item : prod) {
      if (item.distribute) star = &item;
    }
    size_t copies = star ? caps.at(star->slot).items.size() : 1;
    for (size_t c = 0; c < copies; ++c) {
      std::vector<Token> sentence;
      for (const ProductionItem &item : prod) {
        if (!item.is_capture) {
          sentence.push_back(Token{item.word.lexeme, item.word.tag, {}});
        } else if (item.distribute) {
          const auto &part = caps.at(item.slot).items[c];
          sentence.insert(sentence.end(), part.begin(), part.end());
        } else {
          const Capture &cap = caps.at(item.slot);
          sentence.insert(sentence.end(), toks.begin() + cap.begin, toks.begin() + cap.end);
        }
      }
      out.push_back(std::move(sentence));
    }
  }
  return out;
}

// A synthetic sentence the pattern accepts, used to test for self-loops.
std::vector<Token> SamplePatternInstance(const RewriteRule &rule) {
  std::vector<Token> toks;
  for (const PatternElement &e : rule.pattern) {
    switch (e.kind) {
      case PatternElement::Kind::kLiteral:
        for (const std::string &w : e.alternatives.front()) toks.push_back({w, "XX", {}});
        break;
      case PatternElement::Kind::kTag:
        toks.push_back({"w" + ToLower(e.tag), e.tag, {}});
        break;
      case PatternElement::Kind::kNounPhrase:
      case PatternElement::Kind::kRest:
        toks.push_back({"thing", "NN", {}});
        break;
      case PatternElement::Kind::kList:
        toks.push_back({"thing", "NN", {}});
        toks.push_back({",", ",", {}});
        toks.push_back({"other", "NN", {}});
        toks.push_back({"and", "CC", {}});
        toks.push_back({"third", "NN", {}});
        break;
    }
  }
  return toks;
}

std::vector<Token> Slice(const std::vector<Token> &t, size_t b, size_t e) {
  return std::vector<Token>(t.begin() + b, t.begin() + e);
}

void Append(std::vector<Token> &dst, const std::vector<Token> &src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// A conjunct list inside a subject or object phrase.
struct PhraseItems {
  std::vector<std::vector<Token>> items;
};

PhraseItems SplitPhrase(const std::vector<Token> &phrase, const Lexicon &lex) {
  PhraseItems out;
  if (phrase.empty()) return out;
  bool has_or = std::any_of(phrase.begin(), phrase.end(),
                            [](const Token &t) { return t.lower() == "or"; });
  if (phrase.front().lower() == "either" && has_or) {
    out.items.push_back(phrase);
    return out;
  }
  std::vector<Token> current;
  for (const Token &t : phrase) {
    if (IsListSeparator(t)) {
      if (!current.empty()) out.items.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(t);
    }
  }
  if (!current.empty()) out.items.push_back(std::move(current));
  if (out.items.size() < 2) {
    out.items = {phrase};
    return out;
  }
  // A leading quantifier on the first conjunct applies to the others.
  if (auto q = MatchQuantifierAt(out.items[0], 0, lex)) {
    std::vector<Token> qtoks = Slice(out.items[0], q->begin, q->end);
    for (size_t k = 1; k < out.items.size(); ++k) {
      if (!MatchQuantifierAt(out.items[k], 0, lex)) {
        out.items[k].insert(out.items[k].begin(), qtoks.begin(), qtoks.end());
      }
    }
  }
  // "student body and Greek-house members": singular conjuncts share the
  // plural head noun of a multi-word last conjunct.
  const std::vector<Token> &last = out.items.back();
  const Token &head = last.back();
  if (last.size() >= 2 && head.flags.plural && head.tag == "NN") {
    for (size_t k = 0; k + 1 < out.items.size(); ++k) {
      const Token &h = out.items[k].back();
      if (h.tag == "NN" && !h.flags.plural) out.items[k].push_back(head);
    }
  }
  return out;
}

// Drops a trailing comma from a token range.
std::vector<Token> TrimComma(std::vector<Token> t) {
  while (!t.empty() && t.back().lexeme == ",") t.pop_back();
  while (!t.empty() && t.front().lexeme == ",") t.erase(t.begin());
  return t;
}

std::vector<Token> WithoutQuantifier(const std::vector<Token> &phrase, const Lexicon &lex) {
  if (auto q = MatchQuantifierAt(phrase, 0, lex)) return Slice(phrase, q->end, phrase.size());
  return phrase;
}

void PushUnique(std::vector<TaggedSentence> &out, std::vector<Token> toks, const SourceId &src) {
  for (const TaggedSentence &s : out) {
    if (s.tokens == toks) return;
  }
  out.push_back(TaggedSentence{std::move(toks), src});
}

std::vector<TaggedSentence> SimplifyAt(const TaggedSentence &s,
                                       const std::vector<RewriteRule> &rules, const Lexicon &lex,
                                       int depth);

std::vector<TaggedSentence> ApplyPatternsAt(const TaggedSentence &s,
                                            const std::vector<RewriteRule> &rules,
                                            const Lexicon &lex, int depth, bool *fired) {
  if (depth > kMaxRewriteDepth) {
    throw Error(ErrorCode::kRewriteDepthExceeded,
                "cap " + std::to_string(kMaxRewriteDepth) + " at '" + s.Text() + "'");
  }
  for (const RewriteRule &rule : rules) {
    Matcher m(rule, s.tokens);
    if (!m.Run()) continue;
    if (fired) *fired = true;
    std::vector<TaggedSentence> out;
    for (auto &toks : Instantiate(rule, s.tokens, m.captures())) {
      TaggedSentence produced{std::move(toks), s.source};
      produced = AnnotateSpecial(NormalizeLexical(produced, lex), lex);
      for (TaggedSentence &r : ApplyPatternsAt(produced, rules, lex, depth + 1, nullptr)) {
        PushUnique(out, std::move(r.tokens), s.source);
      }
    }
    return out;
  }
  if (fired) *fired = false;
  return {s};
}

std::vector<TaggedSentence> SimplifyAt(const TaggedSentence &s,
                                       const std::vector<RewriteRule> &rules, const Lexicon &lex,
                                       int depth) {
  if (depth > kMaxRewriteDepth) {
    throw Error(ErrorCode::kRewriteDepthExceeded,
                "cap " + std::to_string(kMaxRewriteDepth) + " at '" + s.Text() + "'");
  }
  std::vector<TaggedSentence> next;
  bool fired = false;
  for (const RewriteRule &rule : rules) {
    Matcher m(rule, s.tokens);
    if (!m.Run()) continue;
    fired = true;
    for (auto &toks : Instantiate(rule, s.tokens, m.captures())) {
      TaggedSentence produced{std::move(toks), s.source};
      next.push_back(AnnotateSpecial(NormalizeLexical(produced, lex), lex));
    }
    break;
  }
  if (!fired) {
    next = SplitCompound(s, lex);
    if (next.size() == 1 && next[0].tokens == s.tokens) return {s};
  }
  std::vector<TaggedSentence> out;
  for (const TaggedSentence &p : next) {
    for (TaggedSentence &r : SimplifyAt(p, rules, lex, depth + 1)) {
      PushUnique(out, std::move(r.tokens), s.source);
    }
  }
  return out;
}

}  // namespace

bool IsClauseWord(std::string_view w) {
  return w == "who" || w == "which" || w == "whose" || w == "whom" || w == "that";
}

bool IsNullClauseIsa(const IsaEntry &entry) {
  return entry.canonical.size() == 1 && ToLower(entry.canonical[0].lexeme) == "being";
}

RewriteRule ParseRule(std::string_view id, std::string_view pattern, std::string_view productions) {
  RewriteRule rule;
  rule.id = std::string(id);
  rule.pattern_text = std::string(pattern);
  for (const std::string &unit : PatternUnits(pattern, id)) {
    rule.pattern.push_back(ParsePatternUnit(unit, id));
  }
  if (rule.pattern.empty()) InvalidRule(id, "empty pattern");
  std::map<int, PatternElement::Kind> bound;
  for (const PatternElement &e : rule.pattern) {
    if (e.slot == 0) continue;
    if (!bound.emplace(e.slot, e.kind).second) {
      InvalidRule(id, "slot " + std::to_string(e.slot) + " bound twice");
    }
    if (e.optional) InvalidRule(id, "captures cannot be optional");
  }
  for (const std::string &p : SplitOn(productions, ';')) {
    rule.productions.push_back(ParseProduction(p, id));
  }
  for (const auto &prod : rule.productions) {
    int stars = 0;
    for (const ProductionItem &item : prod) {
      if (!item.is_capture) continue;
      auto it = bound.find(item.slot);
      if (it == bound.end()) InvalidRule(id, "unbound reference $" + std::to_string(item.slot));
      if (item.distribute) {
        ++stars;
        if (it->second != PatternElement::Kind::kList) {
          InvalidRule(id, "$n* needs a list capture");
        }
      }
    }
    if (stars > 1) InvalidRule(id, "at most one distributed capture per production");
  }
  // No self-loop: the rule's output on a sample instance must not re-match.
  std::vector<Token> sample = SamplePatternInstance(rule);
  Matcher m(rule, sample);
  if (!m.Run()) InvalidRule(id, "pattern does not accept its own sample instance");
  for (const auto &out : Instantiate(rule, sample, m.captures())) {
    Matcher again(rule, out);
    if (again.Run()) InvalidRule(id, "production re-matches its own pattern");
  }
  return rule;
}

std::vector<RewriteRule> ParseRules(std::string_view text, std::string_view origin) {
  std::vector<RewriteRule> rules;
  std::set<std::string> ids;
  int line_no = 0;
  for (std::string line : SplitOn(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> f = SplitOn(line, '\t');
    if (f.size() != 3) {
      throw Error(ErrorCode::kMalformedRow, std::string(origin) + ":" + std::to_string(line_no));
    }
    RewriteRule rule = ParseRule(Trim(f[0]), Trim(f[1]), Trim(f[2]));
    if (!ids.insert(rule.id).second) InvalidRule(rule.id, "duplicate id");
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<RewriteRule> LoadRules(const std::string &path) {
  return ParseRules(ReadFile(path), path);
}

std::string_view DefaultRulesText() { return kDefaultRules; }

const std::vector<RewriteRule> &DefaultRules() {
  static const std::vector<RewriteRule> *rules =
      new std::vector<RewriteRule>(ParseRules(kDefaultRules, "default_rules.tsv"));
  return *rules;
}

std::optional<std::map<int, Capture>> MatchRule(const RewriteRule &rule,
                                                const std::vector<Token> &tokens) {
  Matcher m(rule, tokens);
  if (!m.Run()) return std::nullopt;
  return m.captures();
}

std::vector<TaggedSentence> ApplyPatterns(const TaggedSentence &s,
                                          const std::vector<RewriteRule> &rules,
                                          const Lexicon &lex) {
  return ApplyPatternsAt(s, rules, lex, 0, nullptr);
}

std::vector<TaggedSentence> SplitCompound(const TaggedSentence &s, const Lexicon &lex) {
  const std::vector<Token> &t = s.tokens;
  std::vector<IsaSpan> spans = FindIsaSpans(t, lex);
  if (spans.empty() || spans.size() > 3) return {s};
  auto clause_word_before = [&](const IsaSpan &sp) {
    return sp.begin > 0 && IsClauseWord(t[sp.begin - 1].lower());
  };
  if (spans.size() == 3) {
    if (clause_word_before(spans[0]) && clause_word_before(spans[2])) {
      throw Error(ErrorCode::kUnsaturatedSentence, s.Text());
    }
    return {s};
  }

  std::vector<Token> subject, main_isa, object;
  // Relative clause split off into its own sentences.
  std::vector<Token> clause_isa, clause_object;
  bool subject_clause = false, object_clause = false;
  // Null clause ("being ...") kept inside each output.
  std::vector<Token> opaque_clause;

  if (spans.size() == 1) {
    subject = Slice(t, 0, spans[0].begin);
    main_isa = Slice(t, spans[0].begin, spans[0].end);
    object = Slice(t, spans[0].end, t.size());
  } else {
    const IsaSpan &a = spans[0];
    const IsaSpan &b = spans[1];
    if (clause_word_before(a) && clause_word_before(b)) {
      throw Error(ErrorCode::kUnsaturatedSentence, s.Text());
    }
    if (clause_word_before(a)) {
      subject_clause = true;
      subject = TrimComma(Slice(t, 0, a.begin - 1));
      clause_isa = Slice(t, a.begin, a.end);
      clause_object = TrimComma(Slice(t, a.end, b.begin));
      main_isa = Slice(t, b.begin, b.end);
      object = Slice(t, b.end, t.size());
    } else if (clause_word_before(b)) {
      object_clause = true;
      subject = Slice(t, 0, a.begin);
      main_isa = Slice(t, a.begin, a.end);
      object = TrimComma(Slice(t, a.end, b.begin - 1));
      clause_isa = Slice(t, b.begin, b.end);
      clause_object = Slice(t, b.end, t.size());
    } else if (IsNullClauseIsa(*a.entry) && a.begin > 0 && t[a.begin - 1].lexeme == ",") {
      subject = Slice(t, 0, a.begin - 1);
      opaque_clause = Slice(t, a.begin - 1, b.begin);
      main_isa = Slice(t, b.begin, b.end);
      object = Slice(t, b.end, t.size());
    } else {
      return {s};
    }
  }
  if (subject.empty() || object.empty()) return {s};

  PhraseItems subjects = SplitPhrase(subject, lex);
  PhraseItems objects = SplitPhrase(object, lex);
  PhraseItems clause_objects = SplitPhrase(clause_object, lex);

  std::vector<TaggedSentence> out;
  for (const auto &subj : subjects.items) {
    if (subject_clause) {
      for (const auto &c : clause_objects.items) {
        std::vector<Token> toks = subj;
        Append(toks, clause_isa);
        Append(toks, c);
        PushUnique(out, std::move(toks), s.source);
      }
    }
    for (const auto &obj : objects.items) {
      std::vector<Token> toks = subj;
      Append(toks, opaque_clause);
      Append(toks, main_isa);
      Append(toks, obj);
      PushUnique(out, std::move(toks), s.source);
    }
  }
  if (object_clause) {
    for (const auto &obj : objects.items) {
      for (const auto &c : clause_objects.items) {
        std::vector<Token> toks = WithoutQuantifier(obj, lex);
        Append(toks, clause_isa);
        Append(toks, c);
        PushUnique(out, std::move(toks), s.source);
      }
    }
  }
  return out;
}

std::vector<TaggedSentence> Simplify(const TaggedSentence &s, const std::vector<RewriteRule> &rules,
                                     const Lexicon &lex) {
  return SimplifyAt(s, rules, lex, 0);
}

}  // namespace isaowl
