// Copyright 2026 The Edgedom Authors.
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

#include "edgedom/families.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "catalog_data.h"
#include "edgedom/canonical.h"
#include "edgedom/graph6.h"
#include "edgedom/structure.h"

namespace edgedom {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::vector<CatalogEntry> ParseCatalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    CatalogEntry e;
    if (!(fields >> e.id >> e.order >> e.graph6 >> e.induced_diamonds >>
          e.leaves >> e.edges)) {
      throw std::logic_error("catalog: malformed line: " + line);
    }
    out.push_back(std::move(e));
  }
  return out;
}

void CheckEntry(const CatalogEntry& e) {
  const Graph g = ParseGraph6(e.graph6);
  auto fail = [&](const std::string& what) {
    throw std::logic_error("catalog entry " + e.id + ": " + what);
  };
  if (g.order() != e.order) fail("order mismatch");
  if (g.size() != e.edges) fail("edge count mismatch");
  if (Leaves(g).size() != e.leaves) fail("leaf count mismatch");
  if (CountInducedDiamonds(g) != e.induced_diamonds) fail("diamond mismatch");
  if (!IsConnected(g)) fail("not connected");
  if (!IsK4Free(g)) fail("contains K4");
  if (!IsWellEdgeDominated(g)) fail("not well-edge-dominated");
}

const std::map<std::string, std::string>& Aliases() {
  static const auto* aliases = new std::map<std::string, std::string>{
      {"DH", "DreamHouse"}, {"Cr", "Crystal"}, {"F5", "Fan5"},
      {"H", "House"},       {"K*", "Kstar"},
  };
  return *aliases;
}

const CatalogEntry* Find(std::string_view id) {
  std::string key(id);
  if (auto it = Aliases().find(key); it != Aliases().end()) key = it->second;
  for (const CatalogEntry& e : Catalog()) {
    if (e.id == key) return &e;
  }
  return nullptr;
}

// Vertex ids of `core` after deleting `removed`, or -1 for removed vertices.
Graph Without(const Graph& core, VertexSet removed, std::vector<int>* map) {
  return InducedSubgraph(core, core.Vertices() - removed, map);
}

void RecipeFail(RecipeError::Kind kind, const std::string& what) {
  throw RecipeError(kind, RecipeErrorName(kind) + ": " + what);
}

BipartitionInfo RequireBipartiteWedCore(const Graph& core,
                                        const OracleOptions& options) {
  if (!IsConnected(core)) throw PreconditionError("core is not connected");
  auto bip = Bipartition(core);
  if (!bip) throw PreconditionError("core is not bipartite");
  if (!bip->a_smaller()) throw PreconditionError("core needs |A| < |B|");
  if (!IsWellEdgeDominated(core, options)) {
    throw PreconditionError("core is not well-edge-dominated");
  }
  return *bip;
}

}  // namespace

Graph Complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.AddEdge(i, j);
  }
  return g;
}

Graph CompleteBipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.AddEdge(i, a + j);
  }
  return g;
}

Graph Cycle(int n) {
  Require(n >= 3, "cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Graph Path(int n) {
  Require(n >= 1, "path needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.AddEdge(i, i + 1);
  return g;
}

Graph Star(int leaves) {
  Require(leaves >= 0, "star needs leaves >= 0");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.AddEdge(0, i);
  return g;
}

Graph Diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph House() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

Graph C7Star() {
  Graph g = Cycle(7);
  g.AddEdge(0, 3);
  return g;
}

Graph Fan5() {
  Graph g = Path(5);
  g.RemoveEdge(0, 1);
  for (int v = 1; v <= 4; ++v) g.AddEdge(0, v);
  return g;
}

Graph Propeller(int k) {
  Require(k >= 1, "propeller needs k >= 1");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.AddEdge(0, 2 * i + 1);
    g.AddEdge(0, 2 * i + 2);
    g.AddEdge(2 * i + 1, 2 * i + 2);
  }
  return g;
}

Graph Windmill(int k) {
  Require(k >= 0, "windmill needs k >= 0");
  Graph g = House();
  for (int i = 0; i < k; ++i) {
    const int a = g.AddVertex();
    const int b = g.AddVertex();
    g.AddEdge(0, a);
    g.AddEdge(0, b);
    g.AddEdge(a, b);
  }
  return g;
}

Graph Kite(int n) {
  Require(n >= 1, "kite needs n >= 1");
  Graph g = Diamond();
  for (int i = 0; i < n; ++i) g.AddEdge(0, g.AddVertex());
  return g;
}

Graph KStar() { return Kite(1); }

Graph Build(const NoseFamily& f) {
  return f.kind == NoseFamily::Kind::kPropeller ? Propeller(f.triangles)
                                                : Windmill(f.triangles);
}

Graph ClassR(const NoseFamily& base, int paths) {
  Require(paths >= 1, "class R needs at least one path");
  Graph g = Build(base);
  for (int i = 0; i < paths; ++i) {
    const int c = g.AddVertex();
    const int l = g.AddVertex();
    g.AddEdge(0, c);
    g.AddEdge(c, l);
  }
  return g;
}

const std::vector<CatalogEntry>& Catalog() {
  static const std::vector<CatalogEntry>* catalog = [] {
    auto* entries = new std::vector<CatalogEntry>(ParseCatalog(kCatalogTsv));
    for (const CatalogEntry& e : *entries) CheckEntry(e);
    auto graph_of = [&](const std::string& id) {
      for (const CatalogEntry& e : *entries) {
        if (e.id == id) return ParseGraph6(e.graph6);
      }
      throw std::logic_error("catalog: missing " + id);
    };
    if (!IsIsomorphic(graph_of("W10"), graph_of("DreamHouse"))) {
      throw std::logic_error("catalog: W10 is not the dream house");
    }
    if (!IsIsomorphic(graph_of("W12"), graph_of("Crystal"))) {
      throw std::logic_error("catalog: W12 is not the crystal");
    }
    return entries;
  }();
  return *catalog;
}

Graph Named(std::string_view id) {
  const CatalogEntry* e = Find(id);
  if (e == nullptr) throw InputError("unknown graph id: " + std::string(id));
  return ParseGraph6(e->graph6);
}

std::vector<std::string> CatalogIds() {
  std::vector<std::string> ids;
  for (const CatalogEntry& e : Catalog()) ids.push_back(e.id);
  return ids;
}

std::vector<std::string> ReferenceIds(int order) {
  std::vector<std::string> ids;
  if (order == 7) {
    for (int i = 1; i <= 13; ++i) ids.push_back("W" + std::to_string(i));
  } else if (order == 8) {
    for (int i = 1; i <= 12; ++i) ids.push_back("V" + std::to_string(i));
  } else {
    throw InputError("the reference catalog covers orders 7 and 8 only");
  }
  return ids;
}

std::string RecipeErrorName(RecipeError::Kind kind) {
  switch (kind) {
    case RecipeError::Kind::kMalformed: return "malformed-recipe";
    case RecipeError::Kind::kCoreNotConnected: return "core-not-connected";
    case RecipeError::Kind::kCoreTrivial: return "core-trivial";
    case RecipeError::Kind::kCoreNotBipartite: return "core-not-bipartite";
    case RecipeError::Kind::kCoreNotWed: return "core-not-wed";
    case RecipeError::Kind::kCoreCardinality: return "core-cardinality";
    case RecipeError::Kind::kDetachedNotInB: return "detached-not-in-b";
    case RecipeError::Kind::kReducedNotWed: return "reduced-core-not-wed";
    case RecipeError::Kind::kGammaChanged: return "gamma-changed";
    case RecipeError::Kind::kTrivialComponent: return "trivial-component";
    case RecipeError::Kind::kReducedCardinality: return "reduced-cardinality";
    case RecipeError::Kind::kNotStronglyDetachable:
      return "not-strongly-detachable";
    case RecipeError::Kind::kSupportNotInA: return "support-not-in-a";
    case RecipeError::Kind::kNotSupport: return "not-support";
  }
  return "unknown";
}

void ValidateRecipe(const GClassRecipe& r, const OracleOptions& options) {
  using K = RecipeError::Kind;
  const Graph& core = r.core;
  const int n = core.order();
  if (r.strong.size() != r.windmill_triangles.size() ||
      r.detachable.size() != r.propeller_triangles.size()) {
    RecipeFail(K::kMalformed, "attachment lists differ in length");
  }
  for (int t : r.windmill_triangles) {
    if (t < 0) RecipeFail(K::kMalformed, "windmill triangle count < 0");
  }
  for (int t : r.propeller_triangles) {
    if (t < 1) RecipeFail(K::kMalformed, "propeller triangle count < 1");
  }
  VertexSet detached;
  for (const auto* list : {&r.strong, &r.detachable}) {
    for (int v : *list) {
      if (v < 0 || v >= n) RecipeFail(K::kMalformed, "vertex out of range");
      if (detached.Contains(v)) RecipeFail(K::kMalformed, "repeated vertex");
      detached.Insert(v);
    }
  }
  VertexSet supports;
  for (int y : r.diamond_supports) {
    if (y < 0 || y >= n) RecipeFail(K::kMalformed, "vertex out of range");
    if (supports.Contains(y)) RecipeFail(K::kMalformed, "repeated support");
    supports.Insert(y);
  }

  if (n < 2) RecipeFail(K::kCoreTrivial, "core has fewer than 2 vertices");
  if (!IsConnected(core)) RecipeFail(K::kCoreNotConnected, "core");
  const auto bip = Bipartition(core);
  if (!bip) RecipeFail(K::kCoreNotBipartite, "core has an odd cycle");
  if (!bip->a_smaller()) RecipeFail(K::kCoreCardinality, "|A| >= |B|");
  if (!IsWellEdgeDominated(core, options)) RecipeFail(K::kCoreNotWed, "core");
  if (!(detached - bip->b).empty()) {
    RecipeFail(K::kDetachedNotInB, "a windmill or propeller nose is in A");
  }
  if (bip->a.size() > (bip->b - detached).size()) {
    RecipeFail(K::kReducedCardinality, "|A| > |B - B'|");
  }

  std::vector<int> map;
  const Graph reduced = Without(core, detached, &map);
  for (int v = 0; v < reduced.order(); ++v) {
    if (reduced.Degree(v) == 0) {
      RecipeFail(K::kTrivialComponent, "G' - B' has an isolated vertex");
    }
  }
  if (!IsWellEdgeDominated(reduced, options)) {
    RecipeFail(K::kReducedNotWed, "G' - B'");
  }
  if (EdgeDominationNumber(reduced, options) !=
      EdgeDominationNumber(core, options)) {
    RecipeFail(K::kGammaChanged, "gamma'(G' - B') != gamma'(G')");
  }
  const VertexSet reduced_supports = SupportVertices(reduced);
  for (int s : r.strong) {
    for (int w : core.Neighbors(s)) {
      if (!reduced_supports.Contains(map[w])) {
        RecipeFail(K::kNotStronglyDetachable,
                   "neighbor " + std::to_string(w) + " of " +
                       std::to_string(s) + " is not a support in G' - B'");
      }
    }
  }
  for (int y : r.diamond_supports) {
    if (!bip->a.Contains(y)) RecipeFail(K::kSupportNotInA, std::to_string(y));
    if (!reduced_supports.Contains(map[y])) {
      RecipeFail(K::kNotSupport, std::to_string(y) + " in G' - B'");
    }
  }
}

Graph Attach(const Graph& host, int onto, const Graph& piece, int at,
             std::vector<int>* new_ids) {
  Require(onto >= 0 && onto < host.order(), "attach: host vertex range");
  Require(at >= 0 && at < piece.order(), "attach: piece vertex range");
  Graph g = host;
  std::vector<int> ids(piece.order());
  for (int v = 0; v < piece.order(); ++v) {
    ids[v] = v == at ? onto : g.AddVertex();
  }
  for (const Edge& e : piece.Edges()) g.AddEdge(ids[e.u], ids[e.v]);
  if (new_ids != nullptr) *new_ids = std::move(ids);
  return g;
}

Graph BuildClassG(const GClassRecipe& recipe, GClassLayout* layout,
                  const OracleOptions& options) {
  ValidateRecipe(recipe, options);
  using Kind = GClassLayout::Attachment::Kind;
  GClassLayout out;
  out.core_bipartition = *Bipartition(recipe.core);
  Graph g = recipe.core;
  auto glue = [&](Kind kind, int nose, int triangles, const Graph& piece) {
    std::vector<int> ids;
    g = Attach(g, nose, piece, 0, &ids);
    GClassLayout::Attachment a{kind, nose, triangles, {}};
    a.vertices.assign(ids.begin() + 1, ids.end());
    out.attachments.push_back(std::move(a));
  };
  for (std::size_t i = 0; i < recipe.strong.size(); ++i) {
    glue(Kind::kWindmill, recipe.strong[i], recipe.windmill_triangles[i],
         Windmill(recipe.windmill_triangles[i]));
  }
  for (std::size_t i = 0; i < recipe.detachable.size(); ++i) {
    glue(Kind::kPropeller, recipe.detachable[i], recipe.propeller_triangles[i],
         Propeller(recipe.propeller_triangles[i]));
  }
  for (int y : recipe.diamond_supports) glue(Kind::kDiamond, y, 0, Diamond());
  if (layout != nullptr) *layout = std::move(out);
  return g;
}

int ClassGGammaFormula(const GClassRecipe& recipe) {
  const auto bip = Bipartition(recipe.core);
  if (!bip) throw PreconditionError("core is not bipartite");
  int total = bip->a.size() + static_cast<int>(recipe.diamond_supports.size());
  for (int t : recipe.windmill_triangles) total += t + 2;
  for (int t : recipe.propeller_triangles) total += t;
  return total;
}

Graph BuildClassT(const Graph& core, int w, const OracleOptions& options) {
  const BipartitionInfo bip = RequireBipartiteWedCore(core, options);
  if (!AnalyzeDetachability(core, bip, w, options).detachable) {
    throw PreconditionError("vertex " + std::to_string(w) +
                            " is not detachable");
  }
  return Attach(core, w, Complete(3), 0);
}

Graph BuildClassF(const Graph& core, int w, const OracleOptions& options) {
  const BipartitionInfo bip = RequireBipartiteWedCore(core, options);
  if (!AnalyzeDetachability(core, bip, w, options).strongly_detachable) {
    throw PreconditionError("vertex " + std::to_string(w) +
                            " is not strongly detachable");
  }
  return Attach(core, w, House(), 0);
}

Graph GlueWed(const Graph& g1, int x, const Graph& g2, int y,
              const OracleOptions& options) {
  auto check = [&](const Graph& g, int v, const std::string& name) {
    if (v < 0 || v >= g.order()) throw InputError(name + ": vertex range");
    if (g.size() == 0) throw PreconditionError(name + " is trivial");
    if (!IsWellEdgeDominated(g, options)) {
      throw PreconditionError(name + " is not well-edge-dominated");
    }
    const Graph minus = RemoveVertex(g, v);
    if (!IsWellEdgeDominated(minus, options)) {
      throw PreconditionError(name + " minus its vertex is not "
                              "well-edge-dominated");
    }
    if (EdgeDominationNumber(minus, options) !=
        EdgeDominationNumber(g, options)) {
      throw PreconditionError(name + " loses edge domination number when "
                              "its vertex is removed");
    }
  };
  check(g1, x, "first graph");
  check(g2, y, "second graph");
  return Attach(g1, x, g2, y);
}

}  // namespace edgedom
