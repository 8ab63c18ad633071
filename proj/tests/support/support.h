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

#ifndef ISAOWL_TESTS_SUPPORT_H_
#define ISAOWL_TESTS_SUPPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "isaowl/concept.h"
#include "isaowl/knowledge_base.h"
#include "isaowl/rational.h"
#include "isaowl/reasoner.h"

namespace isaowl::testing {

// Root of the shipped data directory.
std::string DataDir();
std::string DataPath(const std::string &relative);

// ---- golden corpus -------------------------------------------------------

struct GoldenCase {
  std::string id;
  std::vector<std::string> lines;  // tagged sentences translated together
};
std::vector<GoldenCase> LoadGoldenInputs();
// id -> sorted axiom keys
std::map<std::string, std::vector<std::string>> LoadGoldenExpected();

// Sorted axiom keys produced by the full pipeline for one case, translated
// in isolation with the default clock.
std::vector<std::string> TranslateCase(const GoldenCase &c);

struct ExemplarCase {
  std::string input;                  // raw sentence
  std::vector<std::string> expected;  // raw sentences
};
std::vector<ExemplarCase> LoadExemplars();

// ---- random structures ---------------------------------------------------

// A random DAG over labels "C0".."C{n-1}" (edges point from child to a
// lower-numbered parent after a random relabeling).
std::vector<Edge> RandomDagEdges(std::mt19937_64 &rng, int n, double density);

// Applies a label renaming to every endpoint.
std::vector<Edge> Relabel(const std::vector<Edge> &edges,
                          const std::map<std::string, std::string> &names);

Concept RandomConcept(std::mt19937_64 &rng, int depth);
KnowledgeBase RandomKb(std::mt19937_64 &rng, int axioms, int depth);

// ---- reference oracles ---------------------------------------------------

// Instance sets by reverse reachability over the raw edge list: every label
// holds its own seed plus the seeds of all labels that reach it. Labels
// without outgoing edges hang below owl:Thing, which holds every seed.
// Labels are compared verbatim, so inputs must use canonical spellings.
std::map<std::string, std::set<std::string>> BruteForceInstances(
    const std::vector<Edge> &edges, const std::vector<std::string> &nodes = {});

struct BruteIim {
  std::optional<Rational> p, r, op, orr;
};
BruteIim BruteForceIim(const std::vector<Edge> &learned, const std::vector<Edge> &gold,
                       bool include_top);

// Reachability closure of a raw edge list (strict ancestors per label).
std::map<std::string, std::set<std::string>> ReachabilityClosure(const std::vector<Edge> &edges);

// ---- synthetic corpus ----------------------------------------------------

// Tagged IS-A sentences drawn from fixed templates and word lists.
// `allow_only_common` enables "Only NNS are NNS" sentences, whose
// disjointness axioms can make a large random corpus inconsistent.
std::vector<std::string> GenerateCorpus(uint64_t seed, int count, bool allow_only_common);

}  // namespace isaowl::testing

#endif  // ISAOWL_TESTS_SUPPORT_H_
