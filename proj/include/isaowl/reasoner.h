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

#ifndef ISAOWL_REASONER_H_
#define ISAOWL_REASONER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isaowl/knowledge_base.h"

namespace isaowl {

using Edge = std::pair<std::string, std::string>;  // (child, parent)

// A subsumption DAG over concept labels rooted at owl:Thing. Cycles in the
// input are merged into one node named by the least member label.
class TaxonomyGraph {
 public:
  static constexpr std::string_view kTop = "owl:Thing";

  TaxonomyGraph();

  // Builds the graph from (child, parent) pairs, which may be redundant or
  // cyclic; `extra_nodes` adds labels without edges. Edges whose child is
  // owl:Thing are dropped. Nodes without a parent are attached to owl:Thing.
  static TaxonomyGraph FromEdges(const std::vector<Edge> &edges,
                                 const std::vector<std::string> &extra_nodes = {});

  // Sorted labels, owl:Thing included.
  const std::vector<std::string> &nodes() const { return nodes_; }
  // Direct (transitively reduced) edges, sorted.
  const std::vector<Edge> &edges() const { return edges_; }
  // Representative -> the other labels merged into it.
  const std::map<std::string, std::vector<std::string>> &merged() const { return merged_; }

  bool Has(std::string_view label) const;
  std::optional<size_t> Index(std::string_view label) const;
  const std::vector<size_t> &Parents(size_t node) const { return parents_[node]; }
  const std::vector<size_t> &Children(size_t node) const { return children_[node]; }
  // Strict ancestors / descendants, sorted by label.
  std::vector<std::string> Ancestors(std::string_view label) const;
  std::vector<std::string> Descendants(std::string_view label) const;

  bool operator==(const TaxonomyGraph &o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_ && merged_ == o.merged_;
  }

 private:
  std::vector<size_t> Reach(size_t start, bool up) const;

  std::vector<std::string> nodes_;
  std::map<std::string, size_t, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<size_t>> parents_;
  std::vector<std::vector<size_t>> children_;
  std::map<std::string, std::vector<std::string>> merged_;
};

// All subsumptions between named concepts of `kb` entailed under
// completion-based reasoning for conjunction, existentials, role inclusion,
// transitivity and bottom. Other constructors (nominals, unions on the
// right, universal and number restrictions, data restrictions) are compared
// structurally as opaque names. Throws Error(kInconsistencyDetected) when a
// named concept is unsatisfiable.
std::map<std::string, std::set<std::string>> Subsumers(const KnowledgeBase &kb);

TaxonomyGraph Classify(const KnowledgeBase &kb);

// `child<TAB>parent` per line, sorted; '#' comments and blank lines are
// skipped on input. Throws Error(kParseError) on malformed rows.
std::string EdgesToTsv(const TaxonomyGraph &g);
TaxonomyGraph ParseEdgesTsv(std::string_view text);

struct InstanceAssignment {
  // Node label -> its seed instance.
  std::map<std::string, std::string> seed;
  // Node label -> seeds of the node and all of its descendants.
  std::map<std::string, std::set<std::string>> inferred;
};

// Label-derived seed name, equal across graphs for labels with the same
// LabelKey.
std::string SeedInstance(std::string_view label);

InstanceAssignment PopulateAndInfer(const TaxonomyGraph &g);

}  // namespace isaowl

#endif  // ISAOWL_REASONER_H_
