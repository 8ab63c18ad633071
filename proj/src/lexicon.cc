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

#include "isaowl/lexicon.h"

#include <array>
#include <filesystem>
#include <functional>

#include "isaowl/error.h"
#include "isaowl/text.h"

namespace isaowl {
namespace {

constexpr std::array<std::string_view, kNumDimensions> kDimensionNames = {
    "Height", "Length", "Breadth", "Depth",    "Weight",       "DigitalSize",
    "Area",   "Volume", "Time",    "Date",     "Age",          "Speed",
    "Acceleration", "Distance", "Currency", "Physics", "Cardinality"};

constexpr std::array<std::string_view, 7> kIsaKindNames = {
    "hyponymy", "hypernymy", "similarity", "equivalence",
    "modal-may", "modal-can", "tense-past"};

constexpr std::array<std::string_view, 9> kQuantifierNames = {
    "a", "an", "the", "some", "all", "only", "at-least", "at-most", "exactly"};

struct Row {
  int line = 0;
  std::vector<std::string> fields;
};

std::vector<Row> ReadTsv(const std::string &path, size_t min_fields, size_t max_fields) {
  std::vector<Row> rows;
  std::string text = ReadFile(path);
  int line_no = 0;
  for (const std::string &raw : SplitOn(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> fields = SplitOn(line, '\t');
    for (std::string &f : fields) f = Trim(f);
    if (fields.size() < min_fields || fields.size() > max_fields) {
      throw Error(ErrorCode::kMalformedRow, path + ":" + std::to_string(line_no));
    }
    for (const std::string &f : fields) {
      if (f.empty()) throw Error(ErrorCode::kMalformedRow, path + ":" + std::to_string(line_no));
    }
    rows.push_back({line_no, std::move(fields)});
  }
  return rows;
}

[[noreturn]] void Malformed(const std::string &path, int line) {
  throw Error(ErrorCode::kMalformedRow, path + ":" + std::to_string(line));
}

std::vector<std::string> LowerWords(std::string_view s) {
  std::vector<std::string> words = SplitWhitespace(s);
  for (std::string &w : words) w = ToLower(w);
  return words;
}

// Parses "is_VBZ like_IN" into tagged words.
std::vector<TaggedWord> ParseTaggedWords(const std::string &s, const std::string &path, int line) {
  std::vector<TaggedWord> out;
  for (const std::string &unit : SplitWhitespace(s)) {
    size_t us = unit.rfind('_');
    if (us == std::string::npos || us == 0 || us + 1 == unit.size()) Malformed(path, line);
    out.push_back({unit.substr(0, us), unit.substr(us + 1)});
  }
  if (out.empty()) Malformed(path, line);
  return out;
}

std::vector<std::string> Lexemes(const std::vector<TaggedWord> &words) {
  std::vector<std::string> out;
  for (const TaggedWord &w : words) out.push_back(ToLower(w.lexeme));
  return out;
}

std::string LabelFromWords(const std::string &s) { return CamelCase(SplitWhitespace(s)); }

void LoadIsa(const std::string &path, Lexicon &lex) {
  std::vector<Row> rows = ReadTsv(path, 3, 3);
  for (const Row &r : rows) {
    std::optional<IsaKind> kind = ParseIsaKind(r.fields[2]);
    if (!kind) Malformed(path, r.line);
    IsaEntry entry{ParseTaggedWords(r.fields[1], path, r.line), *kind};
    if (!lex.isa_variants.Insert(LowerWords(r.fields[0]), entry)) Malformed(path, r.line);
  }
  // Canonical forms are fixed points of normalization.
  for (const Row &r : rows) {
    IsaEntry entry{ParseTaggedWords(r.fields[1], path, r.line), *ParseIsaKind(r.fields[2])};
    std::vector<std::string> key = Lexemes(entry.canonical);
    if (const IsaEntry *existing = lex.isa_variants.Find(key)) {
      if (existing->canonical != entry.canonical || existing->kind != entry.kind) {
        Malformed(path, r.line);
      }
    } else {
      lex.isa_variants.Insert(key, entry);
    }
  }
}

void LoadQuantifiers(const std::string &path, Lexicon &lex) {
  std::vector<Row> rows = ReadTsv(path, 2, 2);
  for (const Row &r : rows) {
    std::optional<QuantifierKind> q = ParseQuantifier(r.fields[1]);
    if (!q) Malformed(path, r.line);
    if (!lex.quantifier_variants.Insert(LowerWords(r.fields[0]),
                                        {QuantifierCanonicalTokens(*q), *q})) {
      Malformed(path, r.line);
    }
  }
  for (const Row &r : rows) {
    QuantifierKind q = *ParseQuantifier(r.fields[1]);
    std::vector<std::string> key = Lexemes(QuantifierCanonicalTokens(q));
    if (const QuantifierEntry *existing = lex.quantifier_variants.Find(key)) {
      if (existing->kind != q) Malformed(path, r.line);
    } else {
      lex.quantifier_variants.Insert(key, {QuantifierCanonicalTokens(q), q});
    }
  }
}

void LoadNumbers(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 2, 2)) {
    if (!IsAllDigits(r.fields[1]) || r.fields[1].size() > 15) Malformed(path, r.line);
    lex.number_words[ToLower(r.fields[0])] = std::stoll(r.fields[1]);
  }
}

void LoadUnits(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 2, 2)) {
    std::optional<Dimension> d = ParseDimension(r.fields[1]);
    if (!d) throw Error(ErrorCode::kUnknownDimension, r.fields[1]);
    lex.unit_map[ToLower(r.fields[0])] = *d;
  }
}

void LoadDimAdjectives(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 3, 3)) {
    std::optional<Dimension> d = ParseDimension(r.fields[1]);
    if (!d) throw Error(ErrorCode::kUnknownDimension, r.fields[1]);
    std::string sense = ToLower(r.fields[2]);
    if (sense != "min" && sense != "max") Malformed(path, r.line);
    lex.dimension_adjectives[ToLower(r.fields[0])] = {*d, sense == "min" ? Sense::kMin : Sense::kMax};
  }
}

void LoadHypernyms(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 2, 2)) {
    std::string child = LabelFromWords(r.fields[0]);
    std::string parent = LabelFromWords(r.fields[1]);
    if (child.empty() || parent.empty()) Malformed(path, r.line);
    lex.hypernym_pairs.insert({child, parent});
  }
}

void LoadSynonyms(const std::string &path, Lexicon &lex) {
  std::vector<Row> rows = ReadTsv(path, 2, 2);
  for (const Row &r : rows) {
    std::vector<std::string> variant = LowerWords(r.fields[0]);
    std::vector<std::string> canonical = LowerWords(r.fields[1]);
    // Normalization must never lengthen a sentence.
    if (canonical.size() > variant.size()) Malformed(path, r.line);
    if (!lex.synonyms.Insert(variant, canonical)) Malformed(path, r.line);
  }
  for (const Row &r : rows) {
    std::vector<std::string> canonical = LowerWords(r.fields[1]);
    const std::vector<std::string> *target = lex.synonyms.Find(canonical);
    if (target != nullptr && *target != canonical) Malformed(path, r.line);
  }
}

void LoadGazetteer(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 2, 2)) {
    std::optional<NerClass> c = ParseNerClass(r.fields[1]);
    if (!c) Malformed(path, r.line);
    lex.ner_gazetteer[Join(LowerWords(r.fields[0]), " ")] = *c;
  }
}

void LoadPlurals(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 2, 2)) {
    lex.plural_exceptions[ToLower(r.fields[0])] = ToLower(r.fields[1]);
  }
}

void LoadTagger(const std::string &path, Lexicon &lex) {
  for (const Row &r : ReadTsv(path, 2, 2)) {
    lex.tagger_words[ToLower(r.fields[0])] = r.fields[1];
  }
}

void IndexHypernyms(Lexicon &lex) {
  lex.hypernym_index.clear();
  for (const auto &[child, parent] : lex.hypernym_pairs) {
    lex.hypernym_index[LabelKey(child)].push_back(LabelKey(parent));
  }
  // Iterative three-colour DFS for cycle detection.
  std::map<std::string, int> colour;
  for (const auto &[start, unused] : lex.hypernym_index) {
    if (colour[start] != 0) continue;
    std::vector<std::pair<std::string, size_t>> stack = {{start, 0}};
    colour[start] = 1;
    while (!stack.empty()) {
      auto &[node, next] = stack.back();
      auto it = lex.hypernym_index.find(node);
      if (it == lex.hypernym_index.end() || next >= it->second.size()) {
        colour[node] = 2;
        stack.pop_back();
        continue;
      }
      std::string succ = it->second[next++];
      if (colour[succ] == 1) {
        std::vector<std::string> cycle;
        bool in = false;
        for (const auto &frame : stack) {
          if (frame.first == succ) in = true;
          if (in) cycle.push_back(frame.first);
        }
        throw Error(ErrorCode::kHypernymCycle, Join(cycle, " -> "));
      }
      if (colour[succ] == 0) {
        colour[succ] = 1;
        stack.push_back({succ, 0});
      }
    }
  }
}

}  // namespace

std::string_view DimensionName(Dimension d) { return kDimensionNames[static_cast<int>(d)]; }

std::optional<Dimension> ParseDimension(std::string_view name) {
  std::string key = LabelKey(name);
  for (int i = 0; i < kNumDimensions; ++i) {
    if (LabelKey(kDimensionNames[i]) == key) return static_cast<Dimension>(i);
  }
  return std::nullopt;
}

std::string_view SenseName(Sense s) { return s == Sense::kMin ? "min" : "max"; }

std::string_view NerClassName(NerClass c) {
  switch (c) {
    case NerClass::kPerson: return "Person";
    case NerClass::kLocation: return "Location";
    case NerClass::kOrganization: return "Organization";
    case NerClass::kMisc: return "Misc";
  }
  return "Misc";
}

std::optional<NerClass> ParseNerClass(std::string_view name) {
  std::string key = ToLower(name);
  if (key == "person") return NerClass::kPerson;
  if (key == "location") return NerClass::kLocation;
  if (key == "organization") return NerClass::kOrganization;
  if (key == "misc") return NerClass::kMisc;
  return std::nullopt;
}

std::string_view IsaKindName(IsaKind k) { return kIsaKindNames[static_cast<int>(k)]; }

std::optional<IsaKind> ParseIsaKind(std::string_view name) {
  for (size_t i = 0; i < kIsaKindNames.size(); ++i) {
    if (kIsaKindNames[i] == name) return static_cast<IsaKind>(i);
  }
  return std::nullopt;
}

std::string_view QuantifierName(QuantifierKind q) { return kQuantifierNames[static_cast<int>(q)]; }

std::optional<QuantifierKind> ParseQuantifier(std::string_view name) {
  std::string key = ToLower(name);
  for (size_t i = 0; i < kQuantifierNames.size(); ++i) {
    if (kQuantifierNames[i] == key) return static_cast<QuantifierKind>(i);
  }
  return std::nullopt;
}

std::vector<TaggedWord> QuantifierCanonicalTokens(QuantifierKind q) {
  switch (q) {
    case QuantifierKind::kAtLeast: return {{"at", "IN"}, {"least", "JJS"}};
    case QuantifierKind::kAtMost: return {{"at", "IN"}, {"most", "JJS"}};
    case QuantifierKind::kOnly: return {{"only", "RB"}};
    case QuantifierKind::kExactly: return {{"exactly", "RB"}};
    default: return {{std::string(QuantifierName(q)), "DT"}};
  }
}

LexiconPaths LexiconPaths::InDirectory(const std::string &dir) {
  namespace fs = std::filesystem;
  auto pick = [&](const char *name) {
    fs::path p = fs::path(dir) / name;
    return fs::exists(p) ? p.string() : std::string();
  };
  LexiconPaths paths;
  paths.isa_variants = pick("isa_variants.tsv");
  paths.quantifiers = pick("quantifiers.tsv");
  paths.number_words = pick("number_words.tsv");
  paths.units = pick("units.tsv");
  paths.dim_adjectives = pick("dim_adjectives.tsv");
  paths.hypernyms = pick("hypernyms.tsv");
  paths.synonyms = pick("synonyms.tsv");
  paths.gazetteer = pick("gazetteer.tsv");
  paths.plurals = pick("plurals.tsv");
  paths.tagger = pick("tagger.tsv");
  return paths;
}

Lexicon LoadLexicon(const LexiconPaths &paths) {
  Lexicon lex;
  auto load = [&](const std::string &path, void (*fn)(const std::string &, Lexicon &)) {
    if (!path.empty()) fn(path, lex);
  };
  load(paths.isa_variants, LoadIsa);
  load(paths.quantifiers, LoadQuantifiers);
  load(paths.number_words, LoadNumbers);
  load(paths.units, LoadUnits);
  load(paths.dim_adjectives, LoadDimAdjectives);
  load(paths.hypernyms, LoadHypernyms);
  load(paths.synonyms, LoadSynonyms);
  load(paths.gazetteer, LoadGazetteer);
  load(paths.plurals, LoadPlurals);
  load(paths.tagger, LoadTagger);
  IndexHypernyms(lex);
  return lex;
}

Lexicon LoadLexiconDir(const std::string &dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "lexicon directory not found: " + dir);
  }
  return LoadLexicon(LexiconPaths::InDirectory(dir));
}

bool LookupHypernym(const Lexicon &lex, std::string_view child, std::string_view parent) {
  std::string from = LabelKey(child);
  std::string to = LabelKey(parent);
  if (from == to) return true;
  std::set<std::string> seen = {from};
  std::vector<std::string> frontier = {from};
  while (!frontier.empty()) {
    std::string node = frontier.back();
    frontier.pop_back();
    auto it = lex.hypernym_index.find(node);
    if (it == lex.hypernym_index.end()) continue;
    for (const std::string &next : it->second) {
      if (next == to) return true;
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return false;
}

std::optional<NerClass> LookupNer(const Lexicon &lex, std::string_view name) {
  auto it = lex.ner_gazetteer.find(Join(SplitWhitespace(ToLower(name)), " "));
  if (it == lex.ner_gazetteer.end()) return std::nullopt;
  return it->second;
}

}  // namespace isaowl
