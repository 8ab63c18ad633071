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

#ifndef ISAOWL_PREPROCESS_H_
#define ISAOWL_PREPROCESS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isaowl/lexicon.h"
#include "isaowl/token.h"

namespace isaowl {

// Parses `lexeme_TAG lexeme_TAG ...`; each unit splits at its last
// underscore. Throws Error(kMissingTag) naming the 0-based position.
TaggedSentence ParseTagged(std::string_view line, const SourceId &source = {});

// Minimal tagger for untagged text: closed-class word list, gazetteer and
// capitalization for proper nouns, suffix heuristics for the rest.
TaggedSentence TagRaw(std::string_view line, const Lexicon &lex, const SourceId &source = {});

// Drops sentence-final punctuation tokens (tag ".").
TaggedSentence StripTerminalPunctuation(const TaggedSentence &s);

// Singular surface form of a plural noun, or nullopt when the word is not a
// recognizable plural. Case of the first letter is preserved.
std::optional<std::string> SingularForm(std::string_view plural, const Lexicon &lex);

TaggedSentence Singularize(const TaggedSentence &s, const Lexicon &lex);
TaggedSentence NormalizeLexical(const TaggedSentence &s, const Lexicon &lex);
TaggedSentence AnnotateSpecial(const TaggedSentence &s, const Lexicon &lex);

// StripTerminalPunctuation, Singularize, NormalizeLexical, AnnotateSpecial.
TaggedSentence Preprocess(const TaggedSentence &s, const Lexicon &lex);

// An IS-A lexeme occurrence [begin, end) in a token list.
struct IsaSpan {
  size_t begin = 0;
  size_t end = 0;
  const IsaEntry *entry = nullptr;
};

// Longest IS-A match starting at `pos`. The first token must carry a verb or
// modal tag.
std::optional<IsaSpan> MatchIsaAt(const std::vector<Token> &tokens, size_t pos,
                                  const Lexicon &lex);
// Non-overlapping left-to-right longest matches.
std::vector<IsaSpan> FindIsaSpans(const std::vector<Token> &tokens, const Lexicon &lex);

struct QuantifierSpan {
  size_t begin = 0;
  size_t end = 0;
  const QuantifierEntry *entry = nullptr;
};
std::optional<QuantifierSpan> MatchQuantifierAt(const std::vector<Token> &tokens, size_t pos,
                                                const Lexicon &lex);

}  // namespace isaowl

#endif  // ISAOWL_PREPROCESS_H_
