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

#include "isaowl/reasoner.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "isaowl/error.h"
#include "isaowl/text.h"

namespace isaowl {

namespace {

using Bits = std::vector<uint64_t>;

bool Test(const Bits &b, size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void Set(Bits &b, size_t i) { b[i / 64] |= uint64_t{1} << (i % 64); }

// Completion-based classifier over a normalized TBox.
class Completion {
 public:
  static constexpr int kTopId = 0;
  static constexpr int kBottomId = 1;

  Completion() {
    Id("owl:Thing", false);
    Id("owl:Nothing", false);
  }

  int Named(const std::string &name) { return Id(name, true); }

  void AddGci(const Concept &lhs, const Concept &rhs) { AddRhs(LhsName(lhs), rhs); }

  void AddRoleInclusion(const std::string &sub, const std::string &super) {
    int a = RoleId(sub);
    int b = RoleId(super);
    role_supers_[static_cast<size_t>(a)].insert(b);
  }

  void AddTransitive(const std::string &role) { transitive_.insert(RoleId(role)); }

  void Saturate() {
    CloseRoles();
    size_t n = names_.size();
    subsumers_.assign(n, {});
    for (size_t a = 0; a < n; ++a) {
      Push(static_cast<int>(a), static_cast<int>(a));
      Push(static_cast<int>(a), kTopId);
    }
    while (!queue_.empty()) {
      Task t = queue_.front();
      queue_.pop_front();
      if (t.role < 0) {
        Process(t.a, t.x);
      } else {
        ProcessLink(t.a, t.role, t.x);
      }
    }
  }

  bool IsNamed(int id) const { return named_[static_cast<size_t>(id)]; }
  const std::string &NameOf(int id) const { return names_[static_cast<size_t>(id)]; }
  size_t size() const { return names_.size(); }
  const std::vector<int> &SubsumersOf(int id) const { return subsumers_[static_cast<size_t>(id)]; }
  bool Unsatisfiable(int id) const { return Has(id, kBottomId); }

 private:
  struct Task {
    int a;
    int x;
    int role;  // -1: add x to S(a); otherwise link (a, role, x)
  };

  int Id(const std::string &name, bool named) {
    auto [it, inserted] = ids_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) {
      names_.push_back(name);
      named_.push_back(named);
      told_.emplace_back();
      conj_.emplace_back();
      exists_rhs_.emplace_back();
      exists_lhs_.emplace_back();
    } else if (named) {
      named_[static_cast<size_t>(it->second)] = true;
    }
    return it->second;
  }

  int Fresh() { return Id("\x1f" + std::to_string(fresh_++), false); }

  int Opaque(const Concept &c) { return Id("\x1e" + ToFunctional(c), false); }

  int RoleId(const std::string &role) {
    auto [it, inserted] = role_ids_.emplace(role, static_cast<int>(role_ids_.size()));
    if (inserted) role_supers_.emplace_back();
    return it->second;
  }

  // Returns a name A with C ⊑ A.
  int LhsName(const Concept &c) {
    switch (c.kind) {
      case Concept::Kind::kTop: return kTopId;
      case Concept::Kind::kBottom: return kBottomId;
      case Concept::Kind::kAtomic: return Named(c.name);
      case Concept::Kind::kAnd: {
        int acc = LhsName(c.args[0]);
        for (size_t i = 1; i < c.args.size(); ++i) {
          int next = LhsName(c.args[i]);
          int f = Fresh();
          conj_[static_cast<size_t>(acc)].push_back({next, f});
          conj_[static_cast<size_t>(next)].push_back({acc, f});
          acc = f;
        }
        return acc;
      }
      case Concept::Kind::kOr: {
        int f = Fresh();
        for (const Concept &d : c.args) told_[static_cast<size_t>(LhsName(d))].push_back(f);
        return f;
      }
      case Concept::Kind::kExists: {
        int filler = LhsName(c.args[0]);
        int f = Fresh();
        int r = RoleId(c.name);
        exists_lhs_[static_cast<size_t>(filler)].push_back({r, f});
        return f;
      }
      default: return Opaque(c);
    }
  }

  // Records a ⊑ D.
  void AddRhs(int a, const Concept &d) {
    switch (d.kind) {
      case Concept::Kind::kTop: return;
      case Concept::Kind::kBottom: told_[static_cast<size_t>(a)].push_back(kBottomId); return;
      case Concept::Kind::kAtomic: {
        int id = Named(d.name);
        told_[static_cast<size_t>(a)].push_back(id);
        return;
      }
      case Concept::Kind::kAnd:
        for (const Concept &c : d.args) AddRhs(a, c);
        return;
      case Concept::Kind::kExists: {
        const Concept &filler = d.args[0];
        int b;
        if (filler.kind == Concept::Kind::kAtomic) {
          b = Named(filler.name);
        } else if (filler.kind == Concept::Kind::kTop) {
          b = kTopId;
        } else {
          b = Fresh();
          AddRhs(b, filler);
        }
        int r = RoleId(d.name);
        exists_rhs_[static_cast<size_t>(a)].push_back({r, b});
        return;
      }
      default: {
        int id = Opaque(d);
        told_[static_cast<size_t>(a)].push_back(id);
        return;
      }
    }
  }

  void CloseRoles() {
    size_t n = role_supers_.size();
    closed_supers_.assign(n, {});
    for (size_t r = 0; r < n; ++r) {
      std::set<int> seen{static_cast<int>(r)};
      std::vector<int> stack{static_cast<int>(r)};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int s : role_supers_[static_cast<size_t>(x)]) {
          if (seen.insert(s).second) stack.push_back(s);
        }
      }
      closed_supers_[r].assign(seen.begin(), seen.end());
    }
    succ_.assign(n, {});
    pred_.assign(n, {});
  }

  static uint64_t Key(int a, int b) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
  }

  bool Has(int a, int x) const { return member_.count(Key(a, x)) > 0; }

  void Push(int a, int x) {
    if (!Has(a, x)) queue_.push_back({a, x, -1});
  }

  void PushLink(int a, int r, int b) { queue_.push_back({a, b, r}); }

  void Process(int a, int x) {
    if (!member_.insert(Key(a, x)).second) return;
    subsumers_[static_cast<size_t>(a)].push_back(x);
    size_t xi = static_cast<size_t>(x);
    for (int b : told_[xi]) Push(a, b);
    for (const auto &[y, b] : conj_[xi]) {
      if (Has(a, y)) Push(a, b);
    }
    for (const auto &[r, b] : exists_rhs_[xi]) PushLink(a, r, b);
    for (const auto &[r, c] : exists_lhs_[xi]) {
      auto it = pred_[static_cast<size_t>(r)].find(a);
      if (it == pred_[static_cast<size_t>(r)].end()) continue;
      for (int a0 : it->second) Push(a0, c);
    }
    if (x == kBottomId) {
      for (auto &by_role : pred_) {
        auto it = by_role.find(a);
        if (it == by_role.end()) continue;
        for (int a0 : it->second) Push(a0, kBottomId);
      }
    }
  }

  void ProcessLink(int a, int r, int b) {
    for (int s : closed_supers_[static_cast<size_t>(r)]) {
      size_t si = static_cast<size_t>(s);
      if (!links_.insert({s, Key(a, b)}).second) continue;
      succ_[si][a].push_back(b);
      pred_[si][b].push_back(a);
      for (int x : subsumers_[static_cast<size_t>(b)]) {
        for (const auto &[role, c] : exists_lhs_[static_cast<size_t>(x)]) {
          if (role == s) Push(a, c);
        }
      }
      if (Has(b, kBottomId)) Push(a, kBottomId);
      if (transitive_.count(s)) {
        if (auto it = succ_[si].find(b); it != succ_[si].end()) {
          std::vector<int> next = it->second;
          for (int c : next) PushLink(a, s, c);
        }
        if (auto it = pred_[si].find(a); it != pred_[si].end()) {
          std::vector<int> prev = it->second;
          for (int d : prev) PushLink(d, s, b);
        }
      }
    }
  }

  struct PairHash {
    size_t operator()(const std::pair<int, uint64_t> &p) const {
      return std::hash<uint64_t>()(p.second) * 31 + static_cast<size_t>(p.first);
    }
  };

  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<bool> named_;
  std::vector<std::vector<int>> told_;
  std::vector<std::vector<std::pair<int, int>>> conj_;
  std::vector<std::vector<std::pair<int, int>>> exists_rhs_;
  std::vector<std::vector<std::pair<int, int>>> exists_lhs_;
  int fresh_ = 0;

  std::unordered_map<std::string, int> role_ids_;
  std::vector<std::set<int>> role_supers_;
  std::vector<std::vector<int>> closed_supers_;
  std::set<int> transitive_;

  std::vector<std::vector<int>> subsumers_;
  std::unordered_set<uint64_t> member_;
  std::unordered_set<std::pair<int, uint64_t>, PairHash> links_;
  std::vector<std::unordered_map<int, std::vector<int>>> succ_;
  std::vector<std::unordered_map<int, std::vector<int>>> pred_;
  std::deque<Task> queue_;
};

// Strongly connected components of child -> parent edges (iterative Tarjan).
std::vector<int> Components(size_t n, const std::vector<std::vector<size_t>> &out, int &count) {
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<size_t> stack;
  int counter = 0;
  count = 0;
  for (size_t root = 0; root < n; ++root) {
    if (num[root] >= 0) continue;
    std::vector<std::pair<size_t, size_t>> call{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto &[v, i] = call.back();
      if (i < out[v].size()) {
        size_t w = out[v][i++];
        if (num[w] < 0) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
        continue;
      }
      if (low[v] == num[v]) {
        size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

TaxonomyGraph::TaxonomyGraph() : nodes_{std::string(kTop)} {
  index_.emplace(std::string(kTop), 0);
  parents_.resize(1);
  children_.resize(1);
}

TaxonomyGraph TaxonomyGraph::FromEdges(const std::vector<Edge> &edges,
                                       const std::vector<std::string> &extra_nodes) {
  std::map<std::string, size_t> ids;
  std::vector<std::string> labels;
  auto id = [&](const std::string &s) {
    auto [it, inserted] = ids.emplace(s, labels.size());
    if (inserted) labels.push_back(s);
    return it->second;
  };
  id(std::string(kTop));
  for (const std::string &n : extra_nodes) id(n);
  std::vector<std::pair<size_t, size_t>> raw;
  for (const auto &[c, p] : edges) {
    size_t ci = id(c), pi = id(p);
    if (ci == pi || c == kTop) continue;
    raw.push_back({ci, pi});
  }
  size_t n = labels.size();
  std::vector<std::vector<size_t>> out(n);
  for (auto [c, p] : raw) out[c].push_back(p);
  int ncomp = 0;
  std::vector<int> comp = Components(n, out, ncomp);

  // Representative of each component: its least label.
  std::vector<size_t> rep(static_cast<size_t>(ncomp), SIZE_MAX);
  for (size_t v = 0; v < n; ++v) {
    size_t &r = rep[static_cast<size_t>(comp[v])];
    if (r == SIZE_MAX || labels[v] < labels[r]) r = v;
  }
  TaxonomyGraph g;
  g.nodes_.clear();
  g.index_.clear();
  for (size_t r : rep) g.nodes_.push_back(labels[r]);
  std::sort(g.nodes_.begin(), g.nodes_.end());
  for (size_t i = 0; i < g.nodes_.size(); ++i) g.index_.emplace(g.nodes_[i], i);
  for (size_t v = 0; v < n; ++v) {
    size_t r = rep[static_cast<size_t>(comp[v])];
    if (r != v) g.merged_[labels[r]].push_back(labels[v]);
  }
  for (auto &[k, members] : g.merged_) std::sort(members.begin(), members.end());

  size_t m = g.nodes_.size();
  auto node_of = [&](size_t v) { return g.index_.at(labels[rep[static_cast<size_t>(comp[v])]]); };
  size_t top = g.index_.at(std::string(kTop));
  std::vector<std::set<size_t>> told(m);
  for (auto [c, p] : raw) {
    size_t a = node_of(c), b = node_of(p);
    if (a != b) told[a].insert(b);
  }
  for (size_t v = 0; v < m; ++v) {
    if (told[v].size() > 1) told[v].erase(top);
  }
  // Ancestor sets in parents-first order.
  std::vector<size_t> pending(m, 0);
  std::vector<std::vector<size_t>> kids(m);
  for (size_t v = 0; v < m; ++v) {
    pending[v] = told[v].size();
    for (size_t p : told[v]) kids[p].push_back(v);
  }
  std::vector<size_t> order;
  for (size_t v = 0; v < m; ++v) {
    if (pending[v] == 0) order.push_back(v);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t k : kids[order[i]]) {
      if (--pending[k] == 0) order.push_back(k);
    }
  }
  size_t words = (m + 63) / 64;
  std::vector<Bits> anc(m, Bits(words, 0));
  for (size_t v : order) {
    for (size_t p : told[v]) {
      for (size_t w = 0; w < words; ++w) anc[v][w] |= anc[p][w];
      Set(anc[v], p);
    }
  }
  g.parents_.assign(m, {});
  g.children_.assign(m, {});
  for (size_t v = 0; v < m; ++v) {
    for (size_t p : told[v]) {
      bool direct = true;
      for (size_t q : told[v]) {
        if (q != p && Test(anc[q], p)) {
          direct = false;
          break;
        }
      }
      if (direct) g.parents_[v].push_back(p);
    }
    if (v != top && g.parents_[v].empty()) g.parents_[v].push_back(top);
    for (size_t p : g.parents_[v]) {
      g.children_[p].push_back(v);
      g.edges_.push_back({g.nodes_[v], g.nodes_[p]});
    }
  }
  for (auto &c : g.children_) std::sort(c.begin(), c.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

bool TaxonomyGraph::Has(std::string_view label) const { return index_.find(label) != index_.end(); }

std::optional<size_t> TaxonomyGraph::Index(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<size_t> TaxonomyGraph::Reach(size_t start, bool up) const {
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<size_t> stack{start}, out;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t w : up ? parents_[v] : children_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> TaxonomyGraph::Ancestors(std::string_view label) const {
  std::vector<std::string> out;
  if (auto i = Index(label)) {
    for (size_t v : Reach(*i, true)) out.push_back(nodes_[v]);
  }
  return out;
}

std::vector<std::string> TaxonomyGraph::Descendants(std::string_view label) const {
  std::vector<std::string> out;
  if (auto i = Index(label)) {
    for (size_t v : Reach(*i, false)) out.push_back(nodes_[v]);
  }
  return out;
}

std::map<std::string, std::set<std::string>> Subsumers(const KnowledgeBase &kb) {
  Completion cr;
  for (const std::string &c : kb.concepts()) cr.Named(c);
  for (const Axiom *a : kb.Tbox()) {
    switch (a->kind) {
      case Axiom::Kind::kSubClassOf: cr.AddGci(a->lhs, a->rhs); break;
      case Axiom::Kind::kEquivalentClasses:
        cr.AddGci(a->lhs, a->rhs);
        cr.AddGci(a->rhs, a->lhs);
        break;
      case Axiom::Kind::kSubRole:
        if (a->role_kind == RoleKind::kAbstract) cr.AddRoleInclusion(a->role, a->super_role);
        break;
      case Axiom::Kind::kTransitive: cr.AddTransitive(a->role); break;
      default: break;
    }
  }
  cr.Saturate();
  std::vector<std::string> unsat;
  std::map<std::string, std::set<std::string>> out;
  for (size_t i = 0; i < cr.size(); ++i) {
    int id = static_cast<int>(i);
    if (!cr.IsNamed(id)) continue;
    if (cr.Unsatisfiable(id)) unsat.push_back(cr.NameOf(id));
    std::set<std::string> &sups = out[cr.NameOf(id)];
    for (int s : cr.SubsumersOf(id)) {
      if (s != id && cr.IsNamed(s)) sups.insert(cr.NameOf(s));
    }
  }
  if (!unsat.empty()) {
    std::sort(unsat.begin(), unsat.end());
    throw Error(ErrorCode::kInconsistencyDetected, "unsatisfiable: " + Join(unsat, ", "));
  }
  return out;
}

TaxonomyGraph Classify(const KnowledgeBase &kb) {
  std::vector<Edge> edges;
  std::vector<std::string> nodes;
  for (const auto &[c, sups] : Subsumers(kb)) {
    nodes.push_back(c);
    for (const std::string &s : sups) edges.push_back({c, s});
  }
  return TaxonomyGraph::FromEdges(edges, nodes);
}

std::string EdgesToTsv(const TaxonomyGraph &g) {
  std::vector<Edge> lines = g.edges();
  for (const auto &[r, members] : g.merged()) {
    for (const std::string &m : members) {
      lines.push_back({m, r});
      lines.push_back({r, m});
    }
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto &[c, p] : lines) out += c + "\t" + p + "\n";
  return out;
}

TaxonomyGraph ParseEdgesTsv(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::string> nodes;
  int line_no = 0;
  for (const std::string &raw : SplitOn(text, '\n')) {
    ++line_no;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = SplitOn(line, '\t');
    for (std::string &c : cols) c = Trim(c);
    if (cols.size() == 1 && !cols[0].empty()) {
      nodes.push_back(cols[0]);
    } else if (cols.size() == 2 && !cols[0].empty() && !cols[1].empty()) {
      edges.push_back({cols[0], cols[1]});
    } else {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected child<TAB>parent");
    }
  }
  return TaxonomyGraph::FromEdges(edges, nodes);
}

std::string SeedInstance(std::string_view label) { return "i_" + LabelKey(label); }

InstanceAssignment PopulateAndInfer(const TaxonomyGraph &g) {
  InstanceAssignment out;
  const std::vector<std::string> &nodes = g.nodes();
  for (const std::string &n : nodes) out.seed[n] = SeedInstance(n);
  for (const std::string &n : nodes) {
    std::set<std::string> &ii = out.inferred[n];
    ii.insert(out.seed[n]);
    for (const std::string &d : g.Descendants(n)) ii.insert(out.seed[d]);
  }
  return out;
}

}  // namespace isaowl
