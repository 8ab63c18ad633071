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

#include "isaowl/nss.h"

#include <array>

#include "isaowl/error.h"
#include "isaowl/preprocess.h"
#include "isaowl/simplify.h"
#include "isaowl/text.h"

namespace isaowl {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 3> kNssKindNames = {"simple", "complex", "compound"};
constexpr std::array<std::string_view, 7> kClauseNames = {"none", "null",  "which", "who",
                                                          "whose", "whom", "that"};
constexpr std::array<std::string_view, 3> kListNames = {"single", "conjunction", "disjunction"};
constexpr std::array<std::string_view, 14> kCellNames = {
    "Q1", "M1", "S", "Cl1", "IS-A1", "Q2", "M2", "O1", "Cl2", "IS-A2", "Q3", "M3", "O2", "T"};
constexpr std::array<std::string_view, 3> kFailureNames = {"CellTagMismatch", "NoIsaLexeme",
                                                           "Unsaturated"};

template <typename E, size_t N>
E ParseName(const std::array<std::string_view, N> &names, std::string_view v, const char *what) {
  for (size_t i = 0; i < N; ++i) {
    if (names[i] == v) return static_cast<E>(i);
  }
  throw Error(ErrorCode::kFormatMismatch, std::string("unknown ") + what + " '" + std::string(v) + "'");
}

ClauseKind ClauseKindOf(std::string_view lower) {
  if (lower == "which") return ClauseKind::kWhich;
  if (lower == "who") return ClauseKind::kWho;
  if (lower == "whose") return ClauseKind::kWhose;
  if (lower == "whom") return ClauseKind::kWhom;
  return ClauseKind::kThat;
}

bool IsSeparator(const Token &t) {
  if (t.tag == "," || t.tag == "CC") return true;
  std::string w = t.lower();
  return w == "either" || w == "neither";
}

FitFailure Mismatch(size_t pos, const std::vector<Token> &toks, Cell cell, std::string msg) {
  FitFailure f;
  f.reason = FitFailureReason::kCellTagMismatch;
  f.position = pos;
  f.tag = pos < toks.size() ? toks[pos].tag : "";
  f.cell = std::string(CellName(cell));
  f.message = std::move(msg);
  return f;
}

struct PhraseCells {
  Cell q, m, e;
};

std::variant<Phrase, FitFailure> FitPhrase(const std::vector<Token> &toks, size_t begin, size_t end,
                                           PhraseCells cells, bool subject, const Lexicon &lex) {
  Phrase phrase;
  std::vector<Token> local(toks.begin() + begin, toks.begin() + end);
  size_t pos = 0;
  if (auto q = MatchQuantifierAt(local, 0, lex)) {
    QuantifierCell cell;
    cell.kind = q->entry->kind;
    cell.tokens.assign(local.begin(), local.begin() + q->end);
    pos = q->end;
    bool plain = cell.kind == QuantifierKind::kA || cell.kind == QuantifierKind::kAn ||
                 cell.kind == QuantifierKind::kThe || cell.kind == QuantifierKind::kSome ||
                 cell.kind == QuantifierKind::kAll;
    if (!subject && !plain) {
      return Mismatch(begin, toks, cells.q, "object quantifier must be a, an, the, some or all");
    }
    if (cell.IsSpecial() && cell.kind != QuantifierKind::kOnly) {
      if (pos >= local.size() || local[pos].tag != "CD" || !local[pos].flags.numeral) {
        return Mismatch(begin + pos, toks, cells.q, "numeric quantifier needs a cardinal");
      }
      cell.count = *local[pos].flags.numeral;
      cell.tokens.push_back(local[pos++]);
      if (pos + 1 < local.size() && local[pos].lower() == "of" && local[pos + 1].lower() == "the") {
        cell.of_the = true;
        cell.tokens.push_back(local[pos++]);
        cell.tokens.push_back(local[pos++]);
      }
    }
    phrase.quantifier = std::move(cell);
  }

  std::vector<Token> pending_sep;
  std::vector<std::vector<Token>> items;
  std::vector<size_t> item_starts;
  std::vector<Token> current;
  bool saw_or = false;
  for (size_t i = pos; i < local.size(); ++i) {
    const Token &t = local[i];
    bool at_item_start = current.empty();
    if (IsSeparator(t) || (at_item_start && !items.empty() && t.tag == "DT")) {
      std::string w = t.lower();
      if (w == "or" || w == "nor") saw_or = true;
      if (!current.empty()) {
        items.push_back(std::move(current));
        current.clear();
      }
      pending_sep.push_back(t);
      continue;
    }
    if (current.empty()) {
      phrase.list.separators.push_back(std::move(pending_sep));
      pending_sep.clear();
      item_starts.push_back(begin + i);
    }
    current.push_back(t);
  }
  if (!current.empty()) items.push_back(std::move(current));
  if (!pending_sep.empty()) {
    return Mismatch(end - 1, toks, cells.e, "dangling connective");
  }
  if (items.empty()) {
    return Mismatch(end < toks.size() ? end : begin, toks, cells.e, "missing entity");
  }

  for (size_t k = 0; k < items.size(); ++k) {
    const std::vector<Token> &item = items[k];
    Entity entity;
    size_t head_begin = item.size() - 1;
    if (item.back().tag == "NNP") {
      while (head_begin > 0 && item[head_begin - 1].tag == "NNP") --head_begin;
    }
    for (size_t j = 0; j < item.size(); ++j) {
      size_t abs = item_starts[k] + j;
      if (j < head_begin) {
        if (!ModifierTagAllowed(item[j].tag)) {
          return Mismatch(abs, toks, cells.m, "modifier tag not allowed");
        }
        entity.modifiers.push_back(item[j]);
      } else {
        if (!EntityTagAllowed(item[j].tag)) {
          return Mismatch(abs, toks, cells.e, "entity tag not allowed");
        }
        entity.head.push_back(item[j]);
      }
    }
    phrase.list.entities.push_back(std::move(entity));
  }
  if (phrase.list.entities.size() > 1) {
    phrase.list.kind = saw_or ? ListKind::kDisjunction : ListKind::kConjunction;
  }
  return phrase;
}

std::optional<TemporalCell> TrailingTemporal(const std::vector<Token> &t, size_t begin, size_t end) {
  if (end < begin + 3) return std::nullopt;
  auto is_time_unit = [](const Token &x) {
    return x.tag.starts_with("NN") && x.flags.unit == Dimension::kTime;
  };
  auto is_number = [](const Token &x) { return x.tag == "CD" && x.flags.numeral.has_value(); };
  TemporalCell cell;
  if (t[end - 1].lower() == "ago" && is_time_unit(t[end - 2]) && is_number(t[end - 3])) {
    cell.form = TemporalCell::Form::kAgo;
    cell.amount = *t[end - 3].flags.numeral;
    cell.unit = t[end - 2].lower();
  } else if (t[end - 3].lower() == "for" && is_number(t[end - 2]) && is_time_unit(t[end - 1])) {
    cell.form = TemporalCell::Form::kFor;
    cell.amount = *t[end - 2].flags.numeral;
    cell.unit = t[end - 1].lower();
  } else {
    return std::nullopt;
  }
  cell.tokens.assign(t.begin() + end - 3, t.begin() + end);
  return cell;
}

// Token stream of an instance, each token labeled with its cell and role.
enum class Role { kQuantifier, kSeparator, kModifier, kHead, kClause, kIsa, kTemporal };

struct CellToken {
  Cell cell;
  Role role;
  const Token *token;
};

void EmitPhrase(const Phrase &p, Cell q, Cell m, Cell e, std::vector<CellToken> &out) {
  if (p.quantifier) {
    for (const Token &t : p.quantifier->tokens) out.push_back({q, Role::kQuantifier, &t});
  }
  for (size_t i = 0; i < p.list.entities.size(); ++i) {
    if (i < p.list.separators.size()) {
      for (const Token &t : p.list.separators[i]) out.push_back({e, Role::kSeparator, &t});
    }
    for (const Token &t : p.list.entities[i].modifiers) out.push_back({m, Role::kModifier, &t});
    for (const Token &t : p.list.entities[i].head) out.push_back({e, Role::kHead, &t});
  }
}

std::vector<CellToken> CellTokens(const NssInstance &n) {
  std::vector<CellToken> out;
  auto emit = [&](Cell c, Role r, const std::vector<Token> &ts) {
    for (const Token &t : ts) out.push_back({c, r, &t});
  };
  EmitPhrase(n.subject, Cell::kQ1, Cell::kM1, Cell::kS, out);
  if (n.temporal && n.temporal->place == TemporalCell::Place::kAfterSubject) {
    emit(Cell::kTemporal, Role::kTemporal, n.temporal->tokens);
  }
  emit(Cell::kCl1, Role::kClause, n.cl1.tokens);
  emit(Cell::kIsa1, Role::kIsa, n.isa1.tokens);
  EmitPhrase(n.object1, Cell::kQ2, Cell::kM2, Cell::kO1, out);
  emit(Cell::kCl2, Role::kClause, n.cl2.tokens);
  if (n.isa2) emit(Cell::kIsa2, Role::kIsa, n.isa2->tokens);
  EmitPhrase(n.object2, Cell::kQ3, Cell::kM3, Cell::kO2, out);
  if (n.temporal && n.temporal->place == TemporalCell::Place::kEnd) {
    emit(Cell::kTemporal, Role::kTemporal, n.temporal->tokens);
  }
  return out;
}

bool QuantifierTagAllowed(std::string_view tag) {
  return tag == "DT" || tag == "PDT" || tag == "IN" || tag == "JJS" || tag == "JJ" ||
         tag == "RB" || tag == "CD";
}

bool IsaTokenAllowed(std::string_view tag, bool first) {
  if (first) return tag.starts_with("VB") || tag == "MD";
  return tag.starts_with("VB") || tag == "IN" || tag == "JJ" || tag == "TO" || tag == "DT" ||
         tag.starts_with("NN") || tag == "RB";
}

bool ClauseTokenAllowed(const Token &t) { return t.tag == "," || IsClauseWord(t.lower()); }

bool TemporalTokenAllowed(const Token &t) {
  return t.tag == "CD" || t.tag.starts_with("NN") || t.lower() == "ago" || t.lower() == "for";
}

json QuantifierToJson(const QuantifierCell &q) {
  json tokens = json::array();
  for (const Token &t : q.tokens) tokens.push_back(TokenToJson(t));
  json j = {{"kind", QuantifierName(q.kind)}, {"tokens", tokens}, {"of_the", q.of_the}};
  if (q.count) j["count"] = *q.count;
  return j;
}

json TokensToJson(const std::vector<Token> &ts) {
  json a = json::array();
  for (const Token &t : ts) a.push_back(TokenToJson(t));
  return a;
}

std::vector<Token> TokensFromJson(const json &j) {
  if (!j.is_array()) throw Error(ErrorCode::kFormatMismatch, "expected token array");
  std::vector<Token> out;
  for (const json &t : j) out.push_back(TokenFromJson(t));
  return out;
}

json PhraseToJson(const Phrase &p) {
  json j = json::object();
  if (p.quantifier) j["quantifier"] = QuantifierToJson(*p.quantifier);
  j["list"] = ListKindName(p.list.kind);
  json ents = json::array();
  for (size_t i = 0; i < p.list.entities.size(); ++i) {
    const Entity &e = p.list.entities[i];
    ents.push_back({{"sep", TokensToJson(p.list.separators[i])},
                    {"modifiers", TokensToJson(e.modifiers)},
                    {"head", TokensToJson(e.head)}});
  }
  j["entities"] = ents;
  return j;
}

Phrase PhraseFromJson(const json &j) {
  Phrase p;
  try {
    if (j.contains("quantifier")) {
      const json &q = j.at("quantifier");
      QuantifierCell cell;
      auto kind = ParseQuantifier(q.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::kFormatMismatch, "unknown quantifier");
      cell.kind = *kind;
      cell.tokens = TokensFromJson(q.at("tokens"));
      cell.of_the = q.value("of_the", false);
      if (q.contains("count")) cell.count = q.at("count").get<int64_t>();
      p.quantifier = std::move(cell);
    }
    p.list.kind = ParseName<ListKind>(kListNames, j.at("list").get<std::string>(), "list kind");
    for (const json &e : j.at("entities")) {
      p.list.separators.push_back(TokensFromJson(e.at("sep")));
      p.list.entities.push_back({TokensFromJson(e.at("modifiers")), TokensFromJson(e.at("head"))});
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kFormatMismatch, std::string("phrase: ") + e.what());
  }
  return p;
}

json IsaToJson(const IsaCell &c) {
  return {{"kind", IsaKindName(c.kind)}, {"tokens", TokensToJson(c.tokens)}};
}

IsaCell IsaFromJson(const json &j) {
  IsaCell c;
  auto kind = ParseIsaKind(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorCode::kFormatMismatch, "unknown IS-A kind");
  c.kind = *kind;
  c.tokens = TokensFromJson(j.at("tokens"));
  return c;
}

json ClauseToJson(const ClauseCell &c) {
  return {{"kind", ClauseKindName(c.kind)}, {"tokens", TokensToJson(c.tokens)}};
}

ClauseCell ClauseFromJson(const json &j) {
  return {TokensFromJson(j.at("tokens")),
          ParseName<ClauseKind>(kClauseNames, j.at("kind").get<std::string>(), "clause kind")};
}

NssKind KindFor(const NssInstance &n) {
  for (const Phrase *p : {&n.subject, &n.object1, &n.object2}) {
    if (p->list.entities.size() > 1) return NssKind::kCompound;
  }
  return n.isa2 ? NssKind::kComplex : NssKind::kSimple;
}

}  // namespace

std::string_view NssKindName(NssKind k) { return kNssKindNames[static_cast<size_t>(k)]; }
std::string_view ClauseKindName(ClauseKind k) { return kClauseNames[static_cast<size_t>(k)]; }
std::string_view ListKindName(ListKind k) { return kListNames[static_cast<size_t>(k)]; }
std::string_view CellName(Cell c) { return kCellNames[static_cast<size_t>(c)]; }
std::string_view FitFailureReasonName(FitFailureReason r) {
  return kFailureNames[static_cast<size_t>(r)];
}

bool QuantifierCell::IsSpecial() const {
  return kind == QuantifierKind::kOnly || kind == QuantifierKind::kAtLeast ||
         kind == QuantifierKind::kAtMost || kind == QuantifierKind::kExactly;
}

bool Entity::IsProperNoun() const { return !head.empty() && head.back().tag == "NNP"; }

std::string Entity::HeadTag() const { return head.empty() ? "" : head.back().tag; }

std::vector<std::string> Entity::HeadWords() const {
  std::vector<std::string> out;
  for (const Token &t : head) out.push_back(t.lexeme);
  return out;
}

bool ModifierTagAllowed(std::string_view tag) {
  return tag == "NN" || tag == "JJ" || tag == "CD" || tag == "RB" || tag == "VBG";
}

bool EntityTagAllowed(std::string_view tag) {
  return tag == "NN" || tag == "NNP" || tag == "JJ" || tag == "RB" || tag == "VBG";
}

FitOutcome FitTemplate(const TaggedSentence &s, const Lexicon &lex) {
  FitOutcome out;
  out.source = s.source;
  const std::vector<Token> &t = s.tokens;
  std::vector<IsaSpan> spans = FindIsaSpans(t, lex);
  if (spans.empty()) {
    out.result = FitFailure{FitFailureReason::kNoIsaLexeme, 0, t.empty() ? "" : t[0].tag,
                            std::string(CellName(Cell::kIsa1)), "no IS-A lexeme"};
    return out;
  }
  if (spans.size() > 2) {
    out.result = FitFailure{FitFailureReason::kUnsaturated, spans[2].begin, t[spans[2].begin].tag,
                            std::string(CellName(Cell::kIsa2)), "more than two IS-A lexemes"};
    return out;
  }

  NssInstance n;
  auto clause_word_at = [&](size_t i) { return i < t.size() && IsClauseWord(t[i].lower()); };
  size_t subj_end = spans[0].begin;
  size_t o1_begin = spans[0].end, o1_end = t.size();
  size_t o2_begin = t.size();
  n.isa1 = {std::vector<Token>(t.begin() + spans[0].begin, t.begin() + spans[0].end),
            spans[0].entry->kind};

  if (spans.size() == 2) {
    const IsaSpan &a = spans[0];
    const IsaSpan &b = spans[1];
    bool clause1 = a.begin > 0 && clause_word_at(a.begin - 1);
    bool clause2 = b.begin > 0 && clause_word_at(b.begin - 1);
    if (clause1 && clause2) {
      out.result = FitFailure{FitFailureReason::kUnsaturated, b.begin - 1, t[b.begin - 1].tag,
                              std::string(CellName(Cell::kCl2)),
                              "subject and object clauses cannot co-exist"};
      return out;
    }
    n.isa2 = IsaCell{std::vector<Token>(t.begin() + b.begin, t.begin() + b.end), b.entry->kind};
    o2_begin = b.end;
    if (clause1 || IsNullClauseIsa(*a.entry)) {
      size_t cl_begin = a.begin;
      if (clause1) --cl_begin;
      if (cl_begin > 0 && t[cl_begin - 1].tag == ",") --cl_begin;
      n.cl1.kind = clause1 ? ClauseKindOf(t[a.begin - 1].lower()) : ClauseKind::kNull;
      n.cl1.tokens.assign(t.begin() + cl_begin, t.begin() + a.begin);
      subj_end = cl_begin;
      o1_end = b.begin;
      if (o1_end > o1_begin && t[o1_end - 1].tag == ",") {
        --o1_end;
        n.cl2.tokens.assign(t.begin() + o1_end, t.begin() + b.begin);
      }
    } else if (clause2) {
      size_t cl_begin = b.begin - 1;
      if (cl_begin > o1_begin && t[cl_begin - 1].tag == ",") --cl_begin;
      n.cl2.kind = ClauseKindOf(t[b.begin - 1].lower());
      n.cl2.tokens.assign(t.begin() + cl_begin, t.begin() + b.begin);
      o1_end = cl_begin;
    } else {
      out.result = Mismatch(b.begin, t, Cell::kCl2, "second IS-A lexeme without a clause");
      return out;
    }
  }

  // Temporal adjunct: end of the last object phrase, or end of the subject.
  size_t last_begin = n.isa2 ? o2_begin : o1_begin;
  size_t last_end = t.size();
  if (auto temporal = TrailingTemporal(t, last_begin, last_end)) {
    temporal->place = TemporalCell::Place::kEnd;
    last_end -= 3;
    n.temporal = std::move(temporal);
  } else if (auto before = TrailingTemporal(t, 0, subj_end)) {
    before->place = TemporalCell::Place::kAfterSubject;
    subj_end -= 3;
    n.temporal = std::move(before);
  }
  if (!n.isa2) o1_end = last_end;

  auto fit = [&](size_t b, size_t e, PhraseCells cells, bool subject,
                 Phrase &dst) -> std::optional<FitFailure> {
    auto r = FitPhrase(t, b, e, cells, subject, lex);
    if (auto *f = std::get_if<FitFailure>(&r)) return *f;
    dst = std::move(std::get<Phrase>(r));
    return std::nullopt;
  };
  if (auto f = fit(0, subj_end, {Cell::kQ1, Cell::kM1, Cell::kS}, true, n.subject)) {
    out.result = *f;
    return out;
  }
  if (auto f = fit(o1_begin, o1_end, {Cell::kQ2, Cell::kM2, Cell::kO1}, false, n.object1)) {
    out.result = *f;
    return out;
  }
  if (n.isa2) {
    if (auto f = fit(o2_begin, last_end, {Cell::kQ3, Cell::kM3, Cell::kO2}, false, n.object2)) {
      out.result = *f;
      return out;
    }
  }
  n.kind = KindFor(n);
  out.result = std::move(n);
  return out;
}

std::optional<FitFailure> CheckCellTags(const NssInstance &nss) {
  std::vector<CellToken> cells = CellTokens(nss);
  std::vector<Token> flat;
  for (const CellToken &c : cells) flat.push_back(*c.token);
  Cell prev_isa_cell = Cell::kTemporal;
  for (size_t i = 0; i < cells.size(); ++i) {
    const CellToken &c = cells[i];
    const Token &t = *c.token;
    bool ok = true;
    switch (c.role) {
      case Role::kQuantifier: ok = QuantifierTagAllowed(t.tag); break;
      case Role::kSeparator: ok = t.tag == "," || t.tag == "CC" || t.tag == "DT"; break;
      case Role::kModifier: ok = ModifierTagAllowed(t.tag); break;
      case Role::kHead: ok = EntityTagAllowed(t.tag); break;
      case Role::kClause: ok = ClauseTokenAllowed(t); break;
      case Role::kIsa: ok = IsaTokenAllowed(t.tag, c.cell != prev_isa_cell); break;
      case Role::kTemporal: ok = TemporalTokenAllowed(t); break;
    }
    if (c.role == Role::kIsa) prev_isa_cell = c.cell;
    if (!ok) return Mismatch(i, flat, c.cell, "tag not allowed in cell");
  }
  auto fail = [&](Cell cell, const char *msg) {
    return Mismatch(flat.size(), flat, cell, msg);
  };
  if (nss.subject.list.empty()) return fail(Cell::kS, "empty subject");
  if (nss.object1.list.empty()) return fail(Cell::kO1, "empty object");
  if (nss.cl1.kind != ClauseKind::kNone && nss.cl2.kind != ClauseKind::kNone) {
    return fail(Cell::kCl2, "both clauses present");
  }
  if (nss.isa2.has_value() == nss.object2.list.empty()) {
    return fail(Cell::kO2, "second IS-A and second object must co-occur");
  }
  if (nss.kind != KindFor(nss)) return fail(Cell::kS, "kind disagrees with cells");
  for (const Phrase *p : {&nss.subject, &nss.object1, &nss.object2}) {
    if (p->list.separators.size() != p->list.entities.size()) {
      return fail(Cell::kS, "separator count mismatch");
    }
    for (const Entity &e : p->list.entities) {
      if (e.head.empty()) return fail(Cell::kS, "entity without head");
    }
  }
  return std::nullopt;
}

std::vector<Token> Reconstruct(const NssInstance &nss) {
  std::vector<Token> out;
  for (const CellToken &c : CellTokens(nss)) out.push_back(*c.token);
  return out;
}

CharacterizationScores ComputeCharacterization(const CharacterizationCounts &c) {
  CharacterizationScores s;
  if (c.n_fitted > 0) s.cp = Rational(c.n_correct, c.n_fitted);
  if (c.n > 0) s.cr = Rational(c.n_correct, c.n);
  return s;
}

CharacterizationCounts CountOutcomes(const std::vector<FitOutcome> &outcomes,
                                     const std::vector<bool> *gold) {
  if (gold && gold->size() != outcomes.size()) {
    throw Error(ErrorCode::kFormatMismatch, "gold flags do not align with outcomes");
  }
  CharacterizationCounts c;
  c.n = static_cast<int64_t>(outcomes.size());
  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].ok()) continue;
    ++c.n_fitted;
    if (CheckCellTags(outcomes[i].instance())) continue;
    if (gold && !(*gold)[i]) continue;
    ++c.n_correct;
  }
  return c;
}

json NssToJson(const NssInstance &n) {
  json j = {{"kind", NssKindName(n.kind)},
            {"subject", PhraseToJson(n.subject)},
            {"cl1", ClauseToJson(n.cl1)},
            {"isa1", IsaToJson(n.isa1)},
            {"object1", PhraseToJson(n.object1)},
            {"cl2", ClauseToJson(n.cl2)}};
  if (n.isa2) {
    j["isa2"] = IsaToJson(*n.isa2);
    j["object2"] = PhraseToJson(n.object2);
  }
  if (n.temporal) {
    const TemporalCell &tc = *n.temporal;
    j["temporal"] = {{"form", tc.form == TemporalCell::Form::kAgo ? "ago" : "for"},
                     {"place", tc.place == TemporalCell::Place::kEnd ? "end" : "after-subject"},
                     {"amount", tc.amount},
                     {"unit", tc.unit},
                     {"tokens", TokensToJson(tc.tokens)}};
  }
  return j;
}

NssInstance NssFromJson(const json &j) {
  NssInstance n;
  try {
    n.kind = ParseName<NssKind>(kNssKindNames, j.at("kind").get<std::string>(), "NSS kind");
    n.subject = PhraseFromJson(j.at("subject"));
    n.cl1 = ClauseFromJson(j.at("cl1"));
    n.isa1 = IsaFromJson(j.at("isa1"));
    n.object1 = PhraseFromJson(j.at("object1"));
    n.cl2 = ClauseFromJson(j.at("cl2"));
    if (j.contains("isa2")) {
      n.isa2 = IsaFromJson(j.at("isa2"));
      n.object2 = PhraseFromJson(j.at("object2"));
    }
    if (j.contains("temporal")) {
      const json &tj = j.at("temporal");
      TemporalCell tc;
      tc.form = tj.at("form") == "ago" ? TemporalCell::Form::kAgo : TemporalCell::Form::kFor;
      tc.place = tj.at("place") == "end" ? TemporalCell::Place::kEnd
                                         : TemporalCell::Place::kAfterSubject;
      tc.amount = tj.at("amount").get<int64_t>();
      tc.unit = tj.at("unit").get<std::string>();
      tc.tokens = TokensFromJson(tj.at("tokens"));
      n.temporal = std::move(tc);
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kFormatMismatch, std::string("NSS record: ") + e.what());
  }
  return n;
}

json FitOutcomeToJson(const FitOutcome &o) {
  json j = {{"source", SourceToJson(o.source)}};
  if (o.ok()) {
    j["nss"] = NssToJson(o.instance());
  } else {
    const FitFailure &f = o.failure();
    j["failure"] = {{"reason", FitFailureReasonName(f.reason)},
                    {"position", f.position},
                    {"tag", f.tag},
                    {"cell", f.cell},
                    {"message", f.message}};
  }
  return j;
}

FitOutcome FitOutcomeFromJson(const json &j) {
  FitOutcome o;
  try {
    o.source = SourceFromJson(j.at("source"));
    if (j.contains("nss")) {
      o.result = NssFromJson(j.at("nss"));
    } else {
      const json &f = j.at("failure");
      o.result = FitFailure{ParseName<FitFailureReason>(kFailureNames,
                                                        f.at("reason").get<std::string>(), "reason"),
                            f.at("position").get<size_t>(), f.at("tag").get<std::string>(),
                            f.at("cell").get<std::string>(), f.at("message").get<std::string>()};
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kFormatMismatch, std::string("fit record: ") + e.what());
  }
  return o;
}

std::vector<NssInstance> DecomposeComplex(const NssInstance &nss) {
  if (!nss.isa2) return {nss};
  NssInstance first;
  first.subject = nss.subject;
  first.isa1 = nss.isa1;
  first.object1 = nss.object1;

  NssInstance second;
  second.isa1 = *nss.isa2;
  second.object1 = nss.object2;
  second.temporal = nss.temporal;
  if (second.temporal) second.temporal->place = TemporalCell::Place::kEnd;
  if (nss.cl2.kind != ClauseKind::kNone) {
    second.subject = nss.object1;
    second.subject.quantifier.reset();
  } else {
    second.subject = nss.subject;
  }
  first.kind = KindFor(first);
  second.kind = KindFor(second);
  return {first, second};
}

}  // namespace isaowl
