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

#include "isaowl/eval.h"

#include <bit>
#include <map>

#include "isaowl/error.h"
#include "isaowl/text.h"

namespace isaowl {

namespace {

using nlohmann::json;

std::optional<Rational> Ratio(int64_t num, int64_t den) {
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

json RationalJson(const std::optional<Rational> &r) {
  if (!r) return nullptr;
  return {{"exact", r->ToString()}, {"decimal", r->ToDecimal(4)}, {"value", r->ToDouble()}};
}

// Instance sets of one graph as bitsets over a shared seed universe.
struct Inferred {
  std::map<std::string, std::vector<uint64_t>> by_key;  // LabelKey -> II bits
};

Inferred Infer(const TaxonomyGraph &g, const std::map<std::string, size_t> &universe,
               bool include_top) {
  size_t words = (universe.size() + 63) / 64;
  const std::vector<std::string> &nodes = g.nodes();
  std::vector<size_t> seed(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) seed[i] = universe.at(LabelKey(nodes[i]));
  // Children-first accumulation over the DAG.
  std::vector<std::vector<uint64_t>> ii(nodes.size());
  std::vector<bool> done(nodes.size(), false);
  std::vector<std::pair<size_t, bool>> stack;
  for (size_t root = 0; root < nodes.size(); ++root) {
    if (done[root]) continue;
    stack.push_back({root, false});
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (done[v]) continue;
      if (!expanded) {
        stack.push_back({v, true});
        for (size_t c : g.Children(v)) {
          if (!done[c]) stack.push_back({c, false});
        }
        continue;
      }
      std::vector<uint64_t> bits(words, 0);
      bits[seed[v] / 64] |= uint64_t{1} << (seed[v] % 64);
      for (size_t c : g.Children(v)) {
        for (size_t w = 0; w < words; ++w) bits[w] |= ii[c][w];
      }
      ii[v] = std::move(bits);
      done[v] = true;
    }
  }
  Inferred out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!include_top && nodes[i] == TaxonomyGraph::kTop) continue;
    out.by_key[LabelKey(nodes[i])] = std::move(ii[i]);
  }
  return out;
}

int64_t Count(const std::vector<uint64_t> &bits) {
  int64_t n = 0;
  for (uint64_t w : bits) n += std::popcount(w);
  return n;
}

}  // namespace

LexicalScores ComputeLexicalScores(const std::set<std::string> &learned,
                                   const std::set<std::string> &gold) {
  std::set<std::string> l, g;
  for (const std::string &s : learned) l.insert(LabelKey(s));
  for (const std::string &s : gold) g.insert(LabelKey(s));
  LexicalScores out;
  out.learned = static_cast<int64_t>(l.size());
  out.gold = static_cast<int64_t>(g.size());
  for (const std::string &s : l) out.common += g.count(s);
  out.lp = Ratio(out.common, out.learned);
  out.lr = Ratio(out.common, out.gold);
  return out;
}

std::set<std::string> EvaluatedLabels(const TaxonomyGraph &g, bool include_top) {
  std::set<std::string> out;
  for (const std::string &n : g.nodes()) {
    if (include_top || n != TaxonomyGraph::kTop) out.insert(n);
  }
  return out;
}

IimReport ComputeIim(const TaxonomyGraph &learned, const TaxonomyGraph &gold, bool include_top) {
  IimReport r;
  r.include_top = include_top;
  std::set<std::string> cl = EvaluatedLabels(learned, include_top);
  std::set<std::string> cg = EvaluatedLabels(gold, include_top);
  if (cl.empty() || cg.empty()) {
    throw Error(ErrorCode::kEmptyOntology,
                cl.empty() ? "learned taxonomy has no concepts" : "gold taxonomy has no concepts");
  }
  r.lexical = ComputeLexicalScores(cl, cg);

  std::map<std::string, size_t> universe;
  for (const TaxonomyGraph *g : {&learned, &gold}) {
    for (const std::string &n : g->nodes()) universe.emplace(LabelKey(n), 0);
  }
  size_t next = 0;
  for (auto &[k, v] : universe) v = next++;

  Inferred il = Infer(learned, universe, include_top);
  Inferred ig = Infer(gold, universe, include_top);
  r.c_learned = static_cast<int64_t>(il.by_key.size());
  r.c_gold = static_cast<int64_t>(ig.by_key.size());

  std::set<std::string> keys;
  for (const auto &[k, v] : il.by_key) keys.insert(k);
  for (const auto &[k, v] : ig.by_key) keys.insert(k);
  for (const std::string &k : keys) {
    IimTerm t;
    t.label = k;
    auto a = il.by_key.find(k);
    auto b = ig.by_key.find(k);
    if (a != il.by_key.end()) t.learned = Count(a->second);
    if (b != ig.by_key.end()) t.gold = Count(b->second);
    r.den_p += t.learned;
    r.den_r += t.gold;
    if (a != il.by_key.end() && b != ig.by_key.end()) {
      ++r.c_common;
      for (size_t w = 0; w < a->second.size(); ++w) {
        t.common += std::popcount(a->second[w] & b->second[w]);
      }
      r.numerator += t.common;
      r.den_op += t.learned;
      r.den_or += t.gold;
    }
    r.terms.push_back(t);
  }
  r.iim_p = Ratio(r.numerator, r.den_p);
  r.iim_r = Ratio(r.numerator, r.den_r);
  r.iim_op = Ratio(r.numerator, r.den_op);
  r.iim_or = Ratio(r.numerator, r.den_or);
  return r;
}

json IimReportToJson(const IimReport &r) {
  json terms = json::array();
  for (const IimTerm &t : r.terms) {
    terms.push_back(
        {{"label", t.label}, {"learned", t.learned}, {"gold", t.gold}, {"common", t.common}});
  }
  return {{"include_top", r.include_top},
          {"counts",
           {{"learned_concepts", r.c_learned},
            {"gold_concepts", r.c_gold},
            {"common_concepts", r.c_common}}},
          {"lp", RationalJson(r.lexical.lp)},
          {"lr", RationalJson(r.lexical.lr)},
          {"iim_p", RationalJson(r.iim_p)},
          {"iim_r", RationalJson(r.iim_r)},
          {"iim_op", RationalJson(r.iim_op)},
          {"iim_or", RationalJson(r.iim_or)},
          {"sums",
           {{"numerator", r.numerator},
            {"den_p", r.den_p},
            {"den_r", r.den_r},
            {"den_op", r.den_op},
            {"den_or", r.den_or}}},
          {"terms", terms}};
}

}  // namespace isaowl
