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

// Command-line driver: `learn` runs the whole pipeline, the other
// subcommands run one stage on the previous stage's output.

#include <cstdio>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isaowl/dlt.h"
#include "isaowl/error.h"
#include "isaowl/eval.h"
#include "isaowl/lexicon.h"
#include "isaowl/owl_io.h"
#include "isaowl/pipeline.h"
#include "isaowl/reasoner.h"
#include "isaowl/simplify.h"
#include "isaowl/text.h"

#ifndef ISAOWL_DEFAULT_DATA_DIR
#define ISAOWL_DEFAULT_DATA_DIR "data"
#endif

namespace {

using isaowl::Error;
using isaowl::ErrorCode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitStrict = 2;

std::string ReadInput(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  return isaowl::ReadFile(path);
}

void WriteOutput(const std::string &path, const std::string &contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    std::cout.flush();
    return;
  }
  isaowl::WriteFile(path, contents);
}

struct CorpusOptions {
  std::string input = "-";
  bool raw = false;
  std::string lexicon = std::string(ISAOWL_DEFAULT_DATA_DIR) + "/lexicon";
  std::string rules;
  int jobs = 1;
};

void AddCorpusOptions(CLI::App *cmd, CorpusOptions &o) {
  cmd->add_option("-i,--input", o.input, "Corpus file, one sentence per line ('-' for stdin)");
  auto *tagged = cmd->add_flag("--tagged", "Input tokens are word_TAG pairs (default)");
  cmd->add_flag("--raw", o.raw, "Input is plain text tagged by the built-in tagger")
      ->excludes(tagged);
  cmd->add_option("--lexicon", o.lexicon, "Lexicon directory")->check(CLI::ExistingDirectory);
  cmd->add_option("--rules", o.rules, "Rewrite rules TSV replacing the built-in registry")
      ->check(CLI::ExistingFile);
  cmd->add_option("-j,--jobs", o.jobs, "Worker threads for simplify and fit")
      ->check(CLI::PositiveNumber);
}

std::vector<isaowl::RewriteRule> LoadRulesFor(const CorpusOptions &o) {
  if (o.rules.empty()) return isaowl::DefaultRules();
  return isaowl::LoadRules(o.rules);
}

std::vector<isaowl::TaggedSentence> LoadCorpus(const CorpusOptions &o,
                                               const isaowl::Lexicon &lex) {
  std::string document = o.input == "-" ? "stdin" : o.input;
  return isaowl::ReadCorpus(ReadInput(o.input), document,
                            o.raw ? isaowl::InputMode::kRaw : isaowl::InputMode::kTagged, lex);
}

std::string JsonLines(const std::vector<json> &rows) {
  std::string out;
  for (const json &j : rows) {
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string FitJsonLines(const std::vector<isaowl::FitRecord> &fits) {
  std::vector<json> rows;
  rows.reserve(fits.size() + 1);
  for (const auto &f : fits) rows.push_back(isaowl::FitRecordToJson(f));
  rows.push_back({{"summary", isaowl::CountsToJson(isaowl::CountFits(fits))}});
  return JsonLines(rows);
}

void PrintWarnings(const std::vector<std::string> &warnings) {
  for (const std::string &w : warnings) std::cerr << "warning: " << w << '\n';
}

void PrintTranslationErrors(const std::vector<isaowl::TranslationError> &errors) {
  for (const auto &e : errors) {
    std::cerr << "warning: " << e.source.ToString() << ": " << e.error.code << ": "
              << e.error.message << '\n';
  }
}

bool ValidClock(const std::string &clock) {
  if (isaowl::IsIsoDateTime(clock)) return true;
  std::cerr << "error: --clock expects an ISO-8601 date-time such as " << isaowl::kDefaultClock
            << '\n';
  return false;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Translate English IS-A sentences into OWL axioms and evaluate taxonomies"};
  app.require_subcommand(1);

  CorpusOptions corpus;
  std::string clock(isaowl::kDefaultClock);
  bool strict = false;
  std::string emit = "owl";

  // learn
  std::string owl_out, json_out, taxonomy_out, nss_out, manifest_out;
  CLI::App *learn = app.add_subcommand("learn", "Run every stage from corpus to taxonomy");
  AddCorpusOptions(learn, corpus);
  learn->add_option("--clock", clock, "Present time for tense and 'ago' sentences");
  learn->add_option("--owl", owl_out, "OWL functional syntax output (stdout when omitted)");
  learn->add_option("--json", json_out, "Axiom dump with provenance");
  learn->add_option("--taxonomy", taxonomy_out, "Taxonomy edge list (child<TAB>parent)");
  learn->add_option("--nss", nss_out, "Fit records, one JSON object per line");
  learn->add_option("--manifest", manifest_out, "Run manifest JSON");
  learn->add_flag("--strict", strict, "Exit with status 2 on any warning");

  // simplify
  std::string output;
  CLI::App *simplify = app.add_subcommand("simplify", "Preprocess and split into simple sentences");
  AddCorpusOptions(simplify, corpus);
  simplify->add_option("-o,--output", output, "Output JSON lines (stdout when omitted)");

  // fit
  std::string stage_input = "-";
  int fit_jobs = 1;
  CLI::App *fit = app.add_subcommand("fit", "Fit simple sentences into the normalized template");
  fit->add_option("-i,--input", stage_input, "Output of `simplify`");
  fit->add_option("--lexicon", corpus.lexicon, "Lexicon directory")->check(CLI::ExistingDirectory);
  fit->add_option("-j,--jobs", fit_jobs, "Worker threads")->check(CLI::PositiveNumber);
  fit->add_option("-o,--output", output, "Output JSON lines (stdout when omitted)");

  // translate
  CLI::App *translate = app.add_subcommand("translate", "Translate fitted sentences into axioms");
  translate->add_option("-i,--input", stage_input, "Output of `fit`");
  translate->add_option("--lexicon", corpus.lexicon, "Lexicon directory")
      ->check(CLI::ExistingDirectory);
  translate->add_option("--clock", clock, "Present time for tense and 'ago' sentences");
  translate->add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"owl", "json"}));
  translate->add_option("-o,--output", output, "Output file (stdout when omitted)");
  translate->add_flag("--strict", strict, "Exit with status 2 on any warning");

  // classify
  CLI::App *classify = app.add_subcommand("classify", "Classify an OWL knowledge base");
  classify->add_option("-i,--input", stage_input, "OWL functional syntax file");
  classify->add_option("-o,--output", output, "Edge list output (stdout when omitted)");

  // eval
  std::string learned_path, gold_path, report_path;
  bool include_top = false;
  CLI::App *eval = app.add_subcommand("eval", "Compare a learned taxonomy with a gold one");
  eval->add_option("--learned", learned_path, "Learned edge list")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--gold", gold_path, "Gold edge list")->required()->check(CLI::ExistingFile);
  eval->add_flag("--include-top", include_top, "Count owl:Thing as a concept");
  eval->add_option("--report", report_path, "JSON report (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (learn->parsed()) {
      if (!ValidClock(clock)) return kExitError;
      isaowl::Lexicon lex = isaowl::LoadLexiconDir(corpus.lexicon);
      isaowl::LearnOptions options{clock, corpus.jobs};
      isaowl::LearnResult r = isaowl::Learn(LoadCorpus(corpus, lex), lex, LoadRulesFor(corpus),
                                            options);
      WriteOutput(owl_out, isaowl::SerializeOwl(r.translation.kb));
      if (!json_out.empty()) {
        WriteOutput(json_out, isaowl::KbToJson(r.translation.kb).dump(2) + "\n");
      }
      if (!taxonomy_out.empty()) WriteOutput(taxonomy_out, isaowl::EdgesToTsv(r.taxonomy));
      if (!nss_out.empty()) WriteOutput(nss_out, FitJsonLines(r.fits));
      if (!manifest_out.empty()) {
        WriteOutput(manifest_out, isaowl::ManifestJson(r, options).dump(2) + "\n");
      }
      PrintWarnings(r.translation.warnings);
      PrintTranslationErrors(r.translation.errors);
      bool noisy = !r.translation.warnings.empty() || !r.translation.errors.empty();
      return strict && noisy ? kExitStrict : kExitOk;
    }

    if (simplify->parsed()) {
      isaowl::Lexicon lex = isaowl::LoadLexiconDir(corpus.lexicon);
      auto records = isaowl::RunSimplify(LoadCorpus(corpus, lex), lex, LoadRulesFor(corpus),
                                         corpus.jobs);
      std::vector<json> rows;
      for (const auto &r : records) rows.push_back(isaowl::SimpleRecordToJson(r));
      WriteOutput(output, JsonLines(rows));
      return kExitOk;
    }

    if (fit->parsed()) {
      isaowl::Lexicon lex = isaowl::LoadLexiconDir(corpus.lexicon);
      std::vector<isaowl::SimpleRecord> simple;
      for (const json &j : isaowl::ReadJsonLines(ReadInput(stage_input))) {
        simple.push_back(isaowl::SimpleRecordFromJson(j));
      }
      WriteOutput(output, FitJsonLines(isaowl::RunFit(simple, lex, fit_jobs)));
      return kExitOk;
    }

    if (translate->parsed()) {
      if (!ValidClock(clock)) return kExitError;
      isaowl::Lexicon lex = isaowl::LoadLexiconDir(corpus.lexicon);
      std::vector<isaowl::FitRecord> fits;
      for (const json &j : isaowl::ReadJsonLines(ReadInput(stage_input))) {
        fits.push_back(isaowl::FitRecordFromJson(j));
      }
      isaowl::TranslateResult t = isaowl::RunTranslate(fits, lex, clock);
      WriteOutput(output, emit == "json" ? isaowl::KbToJson(t.kb).dump(2) + "\n"
                                         : isaowl::SerializeOwl(t.kb));
      PrintWarnings(t.warnings);
      PrintTranslationErrors(t.errors);
      bool noisy = !t.warnings.empty() || !t.errors.empty();
      return strict && noisy ? kExitStrict : kExitOk;
    }

    if (classify->parsed()) {
      isaowl::KnowledgeBase kb = isaowl::ParseOwl(ReadInput(stage_input));
      WriteOutput(output, isaowl::EdgesToTsv(isaowl::Classify(kb)));
      return kExitOk;
    }

    if (eval->parsed()) {
      isaowl::TaxonomyGraph learned = isaowl::ParseEdgesTsv(isaowl::ReadFile(learned_path));
      isaowl::TaxonomyGraph gold = isaowl::ParseEdgesTsv(isaowl::ReadFile(gold_path));
      isaowl::IimReport report = isaowl::ComputeIim(learned, gold, include_top);
      WriteOutput(report_path, isaowl::IimReportToJson(report).dump(2) + "\n");
      return kExitOk;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
