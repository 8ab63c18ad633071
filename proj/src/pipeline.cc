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

#include "isaowl/pipeline.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "isaowl/error.h"
#include "isaowl/preprocess.h"

namespace isaowl {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

StageError FromError(const Error &e) {
  return StageError{std::string(ErrorCodeName(e.code())), e.what()};
}

// Runs fn(i) for i in [0, n) over `jobs` threads in contiguous chunks.
void ParallelFor(size_t n, int jobs, const std::function<void(size_t)> &fn) {
  size_t workers = std::min<size_t>(std::max(jobs, 1), std::max<size_t>(n, 1));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  for (size_t w = 0; w < workers; ++w) {
    size_t begin = w * chunk;
    size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] {
      for (size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

json StageErrorJson(const StageError &e) { return {{"code", e.code}, {"message", e.message}}; }

StageError StageErrorFromJson(const json &j) {
  if (!j.is_object() || !j.contains("code") || !j.contains("message")) {
    throw Error(ErrorCode::kFormatMismatch, "error record needs code and message");
  }
  return StageError{j.at("code").get<std::string>(), j.at("message").get<std::string>()};
}

json RationalOrNull(const std::optional<Rational> &r) {
  if (!r) return nullptr;
  return {{"exact", r->ToString()}, {"decimal", r->ToDecimal(4)}};
}

}  // namespace

std::vector<TaggedSentence> ReadCorpus(std::string_view text, const std::string &document,
                                       InputMode mode, const Lexicon &lex) {
  std::vector<TaggedSentence> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    SourceId src{document, line_no};
    out.push_back(mode == InputMode::kTagged ? ParseTagged(line, src) : TagRaw(line, lex, src));
  }
  return out;
}

std::vector<SimpleRecord> RunSimplify(const std::vector<TaggedSentence> &corpus,
                                      const Lexicon &lex, const std::vector<RewriteRule> &rules,
                                      int jobs) {
  std::vector<std::vector<SimpleRecord>> per(corpus.size());
  ParallelFor(corpus.size(), jobs, [&](size_t i) {
    const TaggedSentence &s = corpus[i];
    try {
      for (TaggedSentence &t : Simplify(Preprocess(s, lex), rules, lex)) {
        t.source = s.source;
        per[i].push_back(SimpleRecord{s.source, std::move(t)});
      }
    } catch (const Error &e) {
      per[i].push_back(SimpleRecord{s.source, FromError(e)});
    }
  });
  std::vector<SimpleRecord> out;
  for (auto &v : per) {
    for (auto &r : v) out.push_back(std::move(r));
  }
  return out;
}

std::vector<FitRecord> RunFit(const std::vector<SimpleRecord> &simple, const Lexicon &lex,
                              int jobs) {
  std::vector<FitRecord> out(simple.size());
  ParallelFor(simple.size(), jobs, [&](size_t i) {
    const SimpleRecord &r = simple[i];
    out[i].source = r.source;
    if (const auto *err = std::get_if<StageError>(&r.value)) {
      out[i].value = *err;
      return;
    }
    FitOutcome o = FitTemplate(std::get<TaggedSentence>(r.value), lex);
    o.source = r.source;
    out[i].value = std::move(o);
  });
  return out;
}

CharacterizationCounts CountFits(const std::vector<FitRecord> &fits) {
  std::vector<FitOutcome> outcomes;
  int64_t upstream_errors = 0;
  for (const FitRecord &r : fits) {
    if (r.ok()) {
      outcomes.push_back(std::get<FitOutcome>(r.value));
    } else {
      ++upstream_errors;
    }
  }
  CharacterizationCounts c = CountOutcomes(outcomes);
  c.n += upstream_errors;
  return c;
}

TranslateResult RunTranslate(const std::vector<FitRecord> &fits, const Lexicon &lex,
                             const std::string &clock) {
  TranslateResult out;
  TranslationContext ctx(lex, clock);
  for (const FitRecord &r : fits) {
    const auto *outcome = std::get_if<FitOutcome>(&r.value);
    if (outcome == nullptr || !outcome->ok()) continue;
    try {
      std::vector<Axiom> axioms = Translate(outcome->instance(), ctx, r.source);
      // Validate role kinds on a copy so a failing sentence adds nothing.
      KnowledgeBase trial = out.kb;
      for (Axiom &ax : axioms) trial.Add(std::move(ax));
      out.kb = std::move(trial);
      ++out.translated;
    } catch (const Error &e) {
      out.errors.push_back(TranslationError{r.source, FromError(e)});
    }
  }
  for (Axiom &ax : OnlyDisjointnessAxioms(out.kb, ctx)) out.kb.Add(std::move(ax));
  out.warnings = ctx.warnings;
  for (std::string &w : out.kb.InductionWarnings()) out.warnings.push_back(std::move(w));
  return out;
}

LearnResult Learn(const std::vector<TaggedSentence> &corpus, const Lexicon &lex,
                  const std::vector<RewriteRule> &rules, const LearnOptions &options) {
  LearnResult r;
  r.input_sentences = static_cast<int64_t>(corpus.size());
  auto t0 = Clock::now();
  r.simple = RunSimplify(corpus, lex, rules, options.jobs);
  r.timings.simplify_ms = MsSince(t0);
  t0 = Clock::now();
  r.fits = RunFit(r.simple, lex, options.jobs);
  r.counts = CountFits(r.fits);
  r.timings.fit_ms = MsSince(t0);
  t0 = Clock::now();
  r.translation = RunTranslate(r.fits, lex, options.clock);
  r.timings.translate_ms = MsSince(t0);
  t0 = Clock::now();
  r.taxonomy = Classify(r.translation.kb);
  r.timings.classify_ms = MsSince(t0);
  return r;
}

json CountsToJson(const CharacterizationCounts &c) {
  CharacterizationScores s = ComputeCharacterization(c);
  return {{"n", c.n},
          {"n_fitted", c.n_fitted},
          {"n_correct", c.n_correct},
          {"cp", RationalOrNull(s.cp)},
          {"cr", RationalOrNull(s.cr)}};
}

json ManifestJson(const LearnResult &r, const LearnOptions &options) {
  json errors = json::array();
  for (const FitRecord &f : r.fits) {
    if (const auto *e = std::get_if<StageError>(&f.value)) {
      errors.push_back({{"stage", "simplify"}, {"source", SourceToJson(f.source)},
                        {"code", e->code}, {"message", e->message}});
    } else if (!std::get<FitOutcome>(f.value).ok()) {
      const FitFailure &ff = std::get<FitOutcome>(f.value).failure();
      errors.push_back({{"stage", "fit"}, {"source", SourceToJson(f.source)},
                        {"code", FitFailureReasonName(ff.reason)}, {"message", ff.message}});
    }
  }
  for (const TranslationError &e : r.translation.errors) {
    errors.push_back({{"stage", "translate"}, {"source", SourceToJson(e.source)},
                      {"code", e.error.code}, {"message", e.error.message}});
  }
  return {{"clock", options.clock},
          {"jobs", options.jobs},
          {"input_sentences", r.input_sentences},
          {"simple_sentences", r.simple.size()},
          {"characterization", CountsToJson(r.counts)},
          {"translated_instances", r.translation.translated},
          {"axioms", r.translation.kb.size()},
          {"concepts", r.translation.kb.concepts().size()},
          {"taxonomy_nodes", r.taxonomy.nodes().size()},
          {"taxonomy_edges", r.taxonomy.edges().size()},
          {"warnings", r.translation.warnings},
          {"errors", errors},
          {"timings_ms",
           {{"simplify", r.timings.simplify_ms},
            {"fit", r.timings.fit_ms},
            {"translate", r.timings.translate_ms},
            {"classify", r.timings.classify_ms}}}};
}

json SimpleRecordToJson(const SimpleRecord &r) {
  if (const auto *e = std::get_if<StageError>(&r.value)) {
    return {{"source", SourceToJson(r.source)}, {"error", StageErrorJson(*e)}};
  }
  return SentenceToJson(std::get<TaggedSentence>(r.value));
}

SimpleRecord SimpleRecordFromJson(const json &j) {
  if (!j.is_object() || !j.contains("source")) {
    throw Error(ErrorCode::kFormatMismatch, "simple record needs a source");
  }
  SimpleRecord r;
  r.source = SourceFromJson(j.at("source"));
  if (j.contains("error")) {
    r.value = StageErrorFromJson(j.at("error"));
  } else {
    r.value = SentenceFromJson(j);
  }
  return r;
}

json FitRecordToJson(const FitRecord &r) {
  if (const auto *e = std::get_if<StageError>(&r.value)) {
    return {{"source", SourceToJson(r.source)}, {"error", StageErrorJson(*e)}};
  }
  return FitOutcomeToJson(std::get<FitOutcome>(r.value));
}

FitRecord FitRecordFromJson(const json &j) {
  if (!j.is_object() || !j.contains("source")) {
    throw Error(ErrorCode::kFormatMismatch, "fit record needs a source");
  }
  FitRecord r;
  r.source = SourceFromJson(j.at("source"));
  if (j.contains("error")) {
    r.value = StageErrorFromJson(j.at("error"));
  } else {
    r.value = FitOutcomeFromJson(j);
  }
  return r;
}

std::vector<json> ReadJsonLines(std::string_view text) {
  std::vector<json> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kFormatMismatch,
                  "line " + std::to_string(line_no) + ": expected a JSON object");
    }
    if (j.contains("summary")) continue;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace isaowl
