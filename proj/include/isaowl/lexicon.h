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

#ifndef ISAOWL_LEXICON_H_
#define ISAOWL_LEXICON_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isaowl {

// The seventeen measurement dimensions a unit or adjective can refer to.
enum class Dimension {
  kHeight,
  kLength,
  kBreadth,
  kDepth,
  kWeight,
  kDigitalSize,
  kArea,
  kVolume,
  kTime,
  kDate,
  kAge,
  kSpeed,
  kAcceleration,
  kDistance,
  kCurrency,
  kPhysics,
  kCardinality,
};

inline constexpr int kNumDimensions = 17;

std::string_view DimensionName(Dimension d);
// Accepts "Height", "HEIGHT", "digital size", "DIGITAL_SIZE", ...
std::optional<Dimension> ParseDimension(std::string_view name);

enum class Sense { kMin, kMax };
std::string_view SenseName(Sense s);

enum class NerClass { kPerson, kLocation, kOrganization, kMisc };
std::string_view NerClassName(NerClass c);
std::optional<NerClass> ParseNerClass(std::string_view name);

enum class IsaKind {
  kHyponymy,
  kHypernymy,
  kSimilarity,
  kEquivalence,
  kModalMay,
  kModalCan,
  kTensePast,
};
std::string_view IsaKindName(IsaKind k);
std::optional<IsaKind> ParseIsaKind(std::string_view name);

enum class QuantifierKind { kA, kAn, kThe, kSome, kAll, kOnly, kAtLeast, kAtMost, kExactly };
std::string_view QuantifierName(QuantifierKind q);
std::optional<QuantifierKind> ParseQuantifier(std::string_view name);

// A lexeme with its Penn tag, as written into sentences by normalization.
struct TaggedWord {
  std::string lexeme;
  std::string tag;
  bool operator==(const TaggedWord &) const = default;
};

struct IsaEntry {
  std::vector<TaggedWord> canonical;
  IsaKind kind = IsaKind::kHyponymy;
};

struct QuantifierEntry {
  std::vector<TaggedWord> canonical;
  QuantifierKind kind = QuantifierKind::kA;
};

// Map from lower-cased word sequences to values with longest-match lookup.
template <typename T>
class PhraseTable {
 public:
  using Key = std::vector<std::string>;

  // Returns false when the key is already present.
  bool Insert(Key key, T value) {
    if (key.empty()) return false;
    max_len_ = std::max(max_len_, key.size());
    return entries_.emplace(std::move(key), std::move(value)).second;
  }

  const T *Find(const Key &key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Longest entry matching words[pos...]; returns the match length (0 if
  // none) and the value.
  std::pair<size_t, const T *> LongestMatch(const std::vector<std::string> &words,
                                            size_t pos) const {
    size_t avail = pos < words.size() ? words.size() - pos : 0;
    for (size_t len = std::min(max_len_, avail); len > 0; --len) {
      Key key(words.begin() + pos, words.begin() + pos + len);
      if (const T *v = Find(key)) return {len, v};
    }
    return {0, nullptr};
  }

  const std::map<Key, T> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::map<Key, T> entries_;
  size_t max_len_ = 0;
};

struct Lexicon {
  PhraseTable<IsaEntry> isa_variants;
  PhraseTable<QuantifierEntry> quantifier_variants;
  std::map<std::string, int64_t> number_words;
  std::map<std::string, Dimension> unit_map;
  std::map<std::string, std::pair<Dimension, Sense>> dimension_adjectives;
  // Hypernym pairs as CamelCase labels (child, parent).
  std::set<std::pair<std::string, std::string>> hypernym_pairs;
  PhraseTable<std::vector<std::string>> synonyms;
  // Keys are lower-cased names with single spaces between words.
  std::map<std::string, NerClass> ner_gazetteer;
  // Irregular plural -> singular.
  std::map<std::string, std::string> plural_exceptions;
  // Closed-class and known words for the raw-text tagger.
  std::map<std::string, std::string> tagger_words;

  // Adjacency over LabelKey(child) -> LabelKey(parent)s, built at load.
  std::map<std::string, std::vector<std::string>> hypernym_index;
};

// Files making up a lexicon. Empty paths are skipped.
struct LexiconPaths {
  std::string isa_variants;
  std::string quantifiers;
  std::string number_words;
  std::string units;
  std::string dim_adjectives;
  std::string hypernyms;
  std::string synonyms;
  std::string gazetteer;
  std::string plurals;
  std::string tagger;

  // The conventional file names inside `dir`; files that do not exist are
  // left empty.
  static LexiconPaths InDirectory(const std::string &dir);
};

Lexicon LoadLexicon(const LexiconPaths &paths);
Lexicon LoadLexiconDir(const std::string &dir);

// True iff (child, parent) is in the reflexive-transitive closure of the
// hypernym pairs. Labels are compared by LabelKey.
bool LookupHypernym(const Lexicon &lex, std::string_view child, std::string_view parent);

std::optional<NerClass> LookupNer(const Lexicon &lex, std::string_view name);

// Tagged canonical tokens for a canonical quantifier.
std::vector<TaggedWord> QuantifierCanonicalTokens(QuantifierKind q);

}  // namespace isaowl

#endif  // ISAOWL_LEXICON_H_
