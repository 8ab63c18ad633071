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

#include "support.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "isaowl/lexicon.h"
#include "isaowl/pipeline.h"
#include "isaowl/simplify.h"
#include "isaowl/text.h"

#ifndef ISAOWL_TEST_DATA_DIR
#define ISAOWL_TEST_DATA_DIR "data"
#endif

namespace isaowl::testing {

std::string DataDir() { return ISAOWL_TEST_DATA_DIR; }
std::string DataPath(const std::string &relative) { return DataDir() + "/" + relative; }

namespace {

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> SplitOnString(const std::string &s, const std::string &sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t hit = s.find(sep, pos);
    out.push_back(Trim(s.substr(pos, hit == std::string::npos ? std::string::npos : hit - pos)));
    if (hit == std::string::npos) break;
    pos = hit + sep.size();
  }
  return out;
}

template <typename T>
const T &Pick(std::mt19937_64 &rng, const std::vector<T> &v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

int Uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937_64 &rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

std::vector<GoldenCase> LoadGoldenInputs() {
  std::vector<GoldenCase> out;
  for (const std::string &line : Lines(ReadFile(DataPath("corpus/golden_inputs.txt")))) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    out.push_back({line.substr(0, tab), SplitOnString(line.substr(tab + 1), "|||")});
  }
  return out;
}

std::map<std::string, std::vector<std::string>> LoadGoldenExpected() {
  std::map<std::string, std::vector<std::string>> out;
  std::string current;
  for (const std::string &line : Lines(ReadFile(DataPath("corpus/golden_expected.txt")))) {
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      current = line.substr(1, line.size() - 2);
      out[current];
      continue;
    }
    out[current].push_back(line);
  }
  return out;
}

std::vector<std::string> TranslateCase(const GoldenCase &c) {
  static const Lexicon lex = LoadLexiconDir(DataPath("lexicon"));
  std::string text;
  for (const std::string &l : c.lines) text += l + "\n";
  LearnResult r = Learn(ReadCorpus(text, c.id, InputMode::kTagged, lex), lex, DefaultRules(),
                        LearnOptions{});
  std::vector<std::string> keys;
  for (const Axiom &ax : r.translation.kb.axioms()) keys.push_back(ax.Key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<ExemplarCase> LoadExemplars() {
  std::vector<ExemplarCase> out;
  for (const std::string &line : Lines(ReadFile(DataPath("corpus/simplify_exemplars.tsv")))) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    out.push_back({line.substr(0, tab), SplitOnString(line.substr(tab + 1), "|")});
  }
  return out;
}

std::vector<Edge> RandomDagEdges(std::mt19937_64 &rng, int n, double density) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (Coin(rng, density)) {
        edges.push_back({"C" + std::to_string(order[static_cast<size_t>(i)]),
                         "C" + std::to_string(order[static_cast<size_t>(j)])});
      }
    }
    // Isolated labels still need to appear somewhere.
    if (edges.empty() || edges.back().first != "C" + std::to_string(order[static_cast<size_t>(i)])) {
      if (Coin(rng, 0.5)) {
        edges.push_back({"C" + std::to_string(order[static_cast<size_t>(i)]),
                         "C" + std::to_string(order[static_cast<size_t>(Uniform(rng, 0, i - 1))])});
      }
    }
  }
  return edges;
}

std::vector<Edge> Relabel(const std::vector<Edge> &edges,
                          const std::map<std::string, std::string> &names) {
  std::vector<Edge> out;
  for (const auto &[c, p] : edges) out.push_back({names.at(c), names.at(p)});
  return out;
}

namespace {

const std::vector<std::string> kAtoms = {"Cat", "Dog", "Animal", "Student", "Person", "Faculty"};
const std::vector<std::string> kIndividuals = {"john", "mary", "x1", "Paris"};
const std::vector<std::string> kObjectRoles = {"hasPart", "include", "knows"};
const std::vector<std::string> kDataRoles = {"years", "minInclusive", "hasName"};

Literal RandomLiteral(std::mt19937_64 &rng) {
  switch (Uniform(rng, 0, 3)) {
    case 0: return {std::to_string(Uniform(rng, -5, 500)), Datatype::kInteger};
    case 1: return {std::to_string(Uniform(rng, 0, 99)) + ".25", Datatype::kDecimal};
    case 2: return {"2001-02-03T04:05:06Z", Datatype::kDateTime};
    default: return {Pick(rng, std::vector<std::string>{"plain", "two words", "say \"hi\"",
                                                       "back\\slash"}),
                     Datatype::kString};
  }
}

}  // namespace

Concept RandomConcept(std::mt19937_64 &rng, int depth) {
  int kind = depth <= 1 ? Uniform(rng, 0, 3) : Uniform(rng, 0, 12);
  switch (kind) {
    case 0: return Concept::Atom(Pick(rng, kAtoms));
    case 1: return Concept::Nominal(Pick(rng, kIndividuals));
    case 2: return Coin(rng, 0.5) ? Concept::Top() : Concept::Bottom();
    case 3: return Concept::DataValue(Pick(rng, kDataRoles), RandomLiteral(rng));
    case 4:
    case 5: {
      std::vector<Concept> parts;
      int n = Uniform(rng, 2, 3);
      for (int i = 0; i < n; ++i) parts.push_back(RandomConcept(rng, depth - 1));
      return kind == 4 ? Concept::And(parts) : Concept::Or(parts);
    }
    case 6: return Concept::Not(RandomConcept(rng, depth - 1));
    case 7: return Concept::Exists(Pick(rng, kObjectRoles), RandomConcept(rng, depth - 1));
    case 8: return Concept::ForAll(Pick(rng, kObjectRoles), RandomConcept(rng, depth - 1));
    case 9:
      return Concept::AtLeast(Uniform(rng, 0, 4), Pick(rng, kObjectRoles),
                              RandomConcept(rng, depth - 1));
    case 10:
      return Concept::AtMost(Uniform(rng, 0, 4), Pick(rng, kObjectRoles),
                             RandomConcept(rng, depth - 1));
    case 11:
      return Concept::DataSome(Pick(rng, kDataRoles),
                               static_cast<Datatype>(Uniform(rng, 0, 3)));
    default:
      return Concept::DataAll(Pick(rng, kDataRoles), static_cast<Datatype>(Uniform(rng, 0, 3)));
  }
}

KnowledgeBase RandomKb(std::mt19937_64 &rng, int axioms, int depth) {
  KnowledgeBase kb;
  for (int i = 0; i < axioms; ++i) {
    Axiom ax;
    switch (Uniform(rng, 0, 7)) {
      case 0:
      case 1:
        ax = Axiom::SubClassOf(RandomConcept(rng, depth), RandomConcept(rng, depth));
        break;
      case 2:
        ax = Axiom::Equivalent(RandomConcept(rng, depth), RandomConcept(rng, depth));
        break;
      case 3:
        if (Coin(rng, 0.5)) {
          ax = Axiom::SubRole(Pick(rng, kObjectRoles), Pick(rng, kObjectRoles),
                              RoleKind::kAbstract);
        } else {
          ax = Axiom::SubRole(Pick(rng, kDataRoles), Pick(rng, kDataRoles), RoleKind::kConcrete);
        }
        break;
      case 4: ax = Axiom::Transitive(Pick(rng, kObjectRoles)); break;
      case 5:
        ax = Axiom::ClassAssertion(RandomConcept(rng, depth), Pick(rng, kIndividuals));
        break;
      case 6:
        ax = Axiom::RoleAssertion(Pick(rng, kObjectRoles), Pick(rng, kIndividuals),
                                  Pick(rng, kIndividuals));
        break;
      default:
        ax = Axiom::DataAssertion(Pick(rng, kDataRoles), Pick(rng, kIndividuals),
                                  RandomLiteral(rng));
        break;
    }
    if (Coin(rng, 0.5)) ax.Annotate("rule", "random-" + std::to_string(i));
    if (Coin(rng, 0.3)) ax.Annotate("source", "gen:" + std::to_string(i));
    kb.Add(std::move(ax));
  }
  return kb;
}

std::map<std::string, std::set<std::string>> ReachabilityClosure(const std::vector<Edge> &edges) {
  std::map<std::string, std::set<std::string>> up;
  for (const auto &[c, p] : edges) {
    up[c].insert(p);
    up[p];
  }
  std::map<std::string, std::set<std::string>> out;
  for (const auto &[start, direct] : up) {
    std::set<std::string> seen;
    std::vector<std::string> stack(direct.begin(), direct.end());
    while (!stack.empty()) {
      std::string x = stack.back();
      stack.pop_back();
      if (!seen.insert(x).second) continue;
      for (const std::string &y : up[x]) stack.push_back(y);
    }
    out[start] = seen;
  }
  return out;
}

std::map<std::string, std::set<std::string>> BruteForceInstances(
    const std::vector<Edge> &edges, const std::vector<std::string> &nodes) {
  const std::string top(TaxonomyGraph::kTop);
  std::vector<Edge> all = edges;
  std::set<std::string> labels(nodes.begin(), nodes.end());
  for (const auto &[c, p] : edges) {
    labels.insert(c);
    labels.insert(p);
  }
  labels.insert(top);
  for (const std::string &l : labels) {
    if (l != top) all.push_back({l, top});
  }
  std::map<std::string, std::set<std::string>> ancestors = ReachabilityClosure(all);
  std::map<std::string, std::set<std::string>> ii;
  for (const std::string &l : labels) ii[l].insert("i_" + LabelKey(l));
  for (const std::string &l : labels) {
    for (const std::string &a : ancestors[l]) ii[a].insert("i_" + LabelKey(l));
  }
  return ii;
}

BruteIim BruteForceIim(const std::vector<Edge> &learned, const std::vector<Edge> &gold,
                       bool include_top) {
  auto il = BruteForceInstances(learned);
  auto ig = BruteForceInstances(gold);
  if (!include_top) {
    il.erase(std::string(TaxonomyGraph::kTop));
    ig.erase(std::string(TaxonomyGraph::kTop));
  }
  int64_t num = 0, dp = 0, dr = 0, dop = 0, dor = 0;
  for (const auto &[label, inst] : il) {
    dp += static_cast<int64_t>(inst.size());
    auto it = ig.find(label);
    if (it == ig.end()) continue;
    std::vector<std::string> both;
    std::set_intersection(inst.begin(), inst.end(), it->second.begin(), it->second.end(),
                          std::back_inserter(both));
    num += static_cast<int64_t>(both.size());
    dop += static_cast<int64_t>(inst.size());
    dor += static_cast<int64_t>(it->second.size());
  }
  for (const auto &[label, inst] : ig) dr += static_cast<int64_t>(inst.size());
  auto ratio = [](int64_t a, int64_t b) -> std::optional<Rational> {
    if (b == 0) return std::nullopt;
    return Rational(a, b);
  };
  return {ratio(num, dp), ratio(num, dr), ratio(num, dop), ratio(num, dor)};
}

// ---- corpus generator ----------------------------------------------------

namespace {

struct Noun {
  std::string singular;
  std::string plural;
};

const std::vector<Noun> kNouns = {
    {"student", "students"},     {"teacher", "teachers"},   {"cat", "cats"},
    {"dog", "dogs"},             {"animal", "animals"},     {"mammal", "mammals"},
    {"vehicle", "vehicles"},     {"boat", "boats"},         {"house", "houses"},
    {"fruit", "fruits"},         {"apple", "apples"},       {"player", "players"},
    {"researcher", "researchers"}, {"swimmer", "swimmers"}, {"musician", "musicians"},
    {"candidate", "candidates"}, {"member", "members"},     {"leader", "leaders"},
    {"doctor", "doctors"},       {"engineer", "engineers"}, {"artist", "artists"},
    {"bird", "birds"},           {"tree", "trees"},         {"plant", "plants"},
    {"flower", "flowers"},       {"city", "cities"},        {"country", "countries"},
    {"company", "companies"},    {"river", "rivers"},       {"mountain", "mountains"},
    {"singer", "singers"},       {"writer", "writers"},     {"painter", "painters"},
    {"scientist", "scientists"}, {"farmer", "farmers"},     {"worker", "workers"},
    {"department", "departments"}, {"faculty", "faculties"}, {"university", "universities"},
    {"machine", "machines"},     {"computer", "computers"}, {"printer", "printers"},
    {"scanner", "scanners"},     {"keyboard", "keyboards"}, {"drive", "drives"},
    {"tool", "tools"},           {"instrument", "instruments"}, {"guitar", "guitars"},
    {"piano", "pianos"},         {"violin", "violins"},
};

const std::vector<std::string> kAdjectives = {
    "good",   "clever", "wild",  "small", "large",   "old",      "young",   "tall",
    "happy",  "wise",   "red",   "green", "diligent", "qualified", "famous", "brave",
    "honest", "quick",  "quiet", "rich",  "strong",  "gentle",   "bright",  "modern"};

const std::vector<std::string> kNames = {"John",  "Joe",     "Mary",  "Alice", "Bob",
                                         "Jens",  "Richard", "Priya", "Ravi",  "Lena",
                                         "Tariq", "Sofia",   "Kenji", "Omar",  "Ines"};

const std::vector<std::string> kNumbers = {"two", "three", "four", "five", "2", "7", "10"};

std::string W(const std::string &word, const std::string &tag) { return word + "_" + tag; }

std::string Cap(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string Article(const std::string &next) {
  return std::string("aeiou").find(next[0]) != std::string::npos ? "an" : "a";
}

class SentenceMaker {
 public:
  explicit SentenceMaker(uint64_t seed) : rng_(seed) {}

  std::string Make(bool allow_only_common) {
    int t = Uniform(rng_, 0, allow_only_common ? 19 : 18);
    std::vector<std::string> w;
    switch (t) {
      case 0:  // NNP is a [JJ] NN
        w = {W(Name(), "NNP"), W("is", "VBZ")};
        AppendNp(w, true, true);
        break;
      case 1:  // [JJ] NN is a [JJ] NN
        AppendNp(w, false, true, true);
        w.push_back(W("is", "VBZ"));
        AppendNp(w, true, true);
        break;
      case 2:  // Some NNS are JJ
        w = {W("Some", "DT"), W(N().plural, "NNS"), W("are", "VBP"), W(Adj(), "JJ")};
        break;
      case 3:  // All NNS are NNS
        w = {W("All", "DT"), W(N().plural, "NNS"), W("are", "VBP"), W(N().plural, "NNS")};
        break;
      case 4:  // The NN is [very] JJ
        w = {W("The", "DT"), W(N().singular, "NN"), W("is", "VBZ")};
        if (Coin(rng_, 0.4)) w.push_back(W("very", "RB"));
        w.push_back(W(Adj(), "JJ"));
        break;
      case 5: {  // NN is like a NN
        w = {W(Cap(N().singular), "NN"), W("is", "VBZ"), W("like", "IN")};
        std::string o = N().singular;
        w.push_back(W(Article(o), "DT"));
        w.push_back(W(o, "NN"));
        break;
      }
      case 6:  // NN includes NN
        w = {W(Cap(N().singular), "NN"), W("includes", "VBZ"), W(N().singular, "NN")};
        break;
      case 7:  // At least CD NNS are JJ
        w = {W("At", "IN"), W("least", "JJS"), W(Pick(rng_, kNumbers), "CD"),
             W(N().plural, "NNS"), W("are", "VBP"), W(Adj(), "JJ")};
        break;
      case 8:  // Only NNP is a NN
        w = {W("Only", "RB"), W(Name(), "NNP"), W("is", "VBZ")};
        AppendNp(w, true, false);
        break;
      case 9:  // NNP was a NN
        w = {W(Name(), "NNP"), W("was", "VBD")};
        AppendNp(w, true, false);
        break;
      case 10:  // NNP was a NN CD years ago / for CD years
        w = {W(Name(), "NNP"), W("was", "VBD")};
        AppendNp(w, true, false);
        if (Coin(rng_, 0.5)) {
          w.push_back(W(Pick(rng_, kNumbers), "CD"));
          w.push_back(W("years", "NNS"));
          w.push_back(W("ago", "RB"));
        } else {
          w.push_back(W("for", "IN"));
          w.push_back(W(Pick(rng_, kNumbers), "CD"));
          w.push_back(W("years", "NNS"));
        }
        break;
      case 11:  // NNP may be / can become a JJ NN
        w = {W(Name(), "NNP")};
        if (Coin(rng_, 0.5)) {
          w.push_back(W("may", "MD"));
          w.push_back(W("be", "VB"));
        } else {
          w.push_back(W("can", "MD"));
          w.push_back(W("become", "VB"));
        }
        AppendNp(w, true, true);
        break;
      case 12: {  // NNP , being a JJ NN , is JJ
        w = {W(Name(), "NNP"), W(",", ","), W("being", "VBG")};
        AppendNp(w, true, true);
        w.push_back(W(",", ","));
        w.push_back(W("is", "VBZ"));
        w.push_back(W(Adj(), "JJ"));
        break;
      }
      case 13: {  // NNP and NNP are NNS
        std::string a = Name(), b = Name();
        while (b == a) b = Name();
        w = {W(a, "NNP"), W("and", "CC"), W(b, "NNP"), W("are", "VBP"), W(N().plural, "NNS")};
        break;
      }
      case 14: {  // Either NNP or NNP is a NN
        std::string a = Name(), b = Name();
        while (b == a) b = Name();
        w = {W("Either", "CC"), W(a, "NNP"), W("or", "CC"), W(b, "NNP"), W("is", "VBZ")};
        AppendNp(w, true, false);
        break;
      }
      case 15:  // NN is a kind of NN
        w = {W(Cap(N().singular), "NN"), W("is", "VBZ"), W("a", "DT"), W("kind", "NN"),
             W("of", "IN"), W(N().singular, "NN")};
        break;
      case 16: {  // NNP is also known as NNP
        std::string a = Name(), b = Name();
        while (b == a) b = Name();
        w = {W(a, "NNP"), W("is", "VBZ"), W("also", "RB"), W("known", "VBN"), W("as", "IN"),
             W(b, "NNP")};
        break;
      }
      case 17: {  // NNP , who is a NN , is a NN
        w = {W(Name(), "NNP"), W(",", ","), W("who", "WP"), W("is", "VBZ")};
        AppendNp(w, true, true);
        w.push_back(W(",", ","));
        w.push_back(W("is", "VBZ"));
        AppendNp(w, true, false);
        break;
      }
      case 18: {  // NN and NN are NNS
        std::string a = N().singular, b = N().singular;
        while (b == a) b = N().singular;
        w = {W(Cap(a), "NN"), W("and", "CC"), W(b, "NN"), W("are", "VBP"), W(N().plural, "NNS")};
        break;
      }
      default:  // Only NNS are NNS
        w = {W("Only", "RB"), W(N().plural, "NNS"), W("are", "VBP"), W(N().plural, "NNS")};
        break;
    }
    w.push_back(W(".", "."));
    return Join(w, " ");
  }

 private:
  const Noun &N() { return Pick(rng_, kNouns); }
  const std::string &Adj() { return Pick(rng_, kAdjectives); }
  const std::string &Name() { return Pick(rng_, kNames); }

  // [a/an] [JJ] NN, optionally sentence-initial.
  void AppendNp(std::vector<std::string> &w, bool article, bool may_modify, bool initial = false) {
    std::vector<std::string> np;
    if (may_modify && Coin(rng_, 0.5)) np.push_back(W(Adj(), "JJ"));
    np.push_back(W(N().singular, "NN"));
    if (initial) np[0] = Cap(np[0]);
    if (article) {
      std::string first = np[0].substr(0, np[0].rfind('_'));
      w.push_back(W(Article(ToLower(first)), "DT"));
    }
    w.insert(w.end(), np.begin(), np.end());
  }

  std::mt19937_64 rng_;
};

}  // namespace

std::vector<std::string> GenerateCorpus(uint64_t seed, int count, bool allow_only_common) {
  SentenceMaker maker(seed);
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(maker.Make(allow_only_common));
  return out;
}

}  // namespace isaowl::testing
