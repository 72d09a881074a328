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

#include "edgedom/structure.h"

#include <algorithm>
#include <limits>

#include "edgedom/error.h"

namespace edgedom {
namespace {

const Graph& DiamondPattern() {
  // 0 and 3 exterior, 1 and 2 interior.
  static const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  return g;
}

const Graph& HousePattern() {
  static const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  return g;
}

bool Extend(const Graph& pattern, const Graph& host, std::vector<int>& map,
            VertexSet used) {
  const int p = static_cast<int>(std::count_if(
      map.begin(), map.end(), [](int v) { return v >= 0; }));
  if (p == pattern.order()) return true;
  VertexSet candidates = host.Vertices() - used;
  for (int q = 0; q < p; ++q) {
    if (pattern.HasEdge(p, q)) {
      candidates &= host.Neighbors(map[q]);
    } else {
      candidates -= host.Neighbors(map[q]);
    }
  }
  for (int h : candidates) {
    if (host.Degree(h) < pattern.Degree(p)) continue;
    map[p] = h;
    if (Extend(pattern, host, map, used | VertexSet::Single(h))) return true;
    map[p] = -1;
  }
  return false;
}

}  // namespace

std::optional<int> Girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const int n = g.order();
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.Neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> ContainsInduced(const Graph& pattern,
                                                const Graph& host) {
  if (pattern.order() > host.order()) return std::nullopt;
  std::vector<int> map(pattern.order(), -1);
  if (Extend(pattern, host, map, VertexSet())) return map;
  return std::nullopt;
}

std::vector<Triangle> Triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.Neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.Neighbors(u) & g.Neighbors(v)) {
        if (w > v) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

std::optional<Triangle> FindTriangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.Neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.Neighbors(u) & g.Neighbors(v)) {
        if (w > v) return Triangle{u, v, w};
      }
    }
  }
  return std::nullopt;
}

bool IsK4Free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.Neighbors(u)) {
      if (v <= u) continue;
      VertexSet common = g.Neighbors(u) & g.Neighbors(v);
      for (int w : common) {
        if (w <= v) continue;
        if (!(common & g.Neighbors(w)).empty()) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<int>> FindDiamond(const Graph& g) {
  return ContainsInduced(DiamondPattern(), g);
}

std::optional<std::vector<int>> FindHouse(const Graph& g) {
  return ContainsInduced(HousePattern(), g);
}

int CountInducedDiamonds(const Graph& g) {
  // Each induced diamond has exactly one interior edge: an edge in exactly
  // two triangles whose far vertices are non-adjacent.
  int count = 0;
  for (const Edge& e : g.Edges()) {
    const VertexSet common = g.Neighbors(e.u) & g.Neighbors(e.v);
    for (int x : common) {
      for (int y : common) {
        if (y > x && !g.HasEdge(x, y)) ++count;
      }
    }
  }
  return count;
}

VertexSet Leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.Degree(v) == 1) out.Insert(v);
  }
  return out;
}

VertexSet SupportVertices(const Graph& g) {
  VertexSet out;
  for (int leaf : Leaves(g)) out |= g.Neighbors(leaf);
  return out;
}

Graph IdentifyVertices(const Graph& g, VertexSet s,
                       std::vector<int>* old_to_new, bool* internal_edge) {
  if (s.empty()) throw InputError("IdentifyVertices: empty vertex set");
  bool inside = false;
  for (int v : s) inside = inside || !(g.Neighbors(v) & s).empty();
  if (internal_edge != nullptr) *internal_edge = inside;

  const VertexSet rest = g.Vertices() - s;
  std::vector<int> map;
  Graph out = InducedSubgraph(g, rest, &map);
  const int merged = out.AddVertex();
  for (int v : g.NeighborsOf(s)) out.AddEdge(map[v], merged);
  for (int v : s) map[v] = merged;
  if (old_to_new != nullptr) *old_to_new = std::move(map);
  return out;
}

Graph Reduce(const Graph& g, const EdgeSet& matching) {
  VertexSet covered;
  for (const Edge& e : matching) {
    if (e.v >= g.order() || !g.HasEdge(e.u, e.v)) {
      throw InputError("Reduce: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " is not an edge");
    }
    if (covered.Contains(e.u) || covered.Contains(e.v)) {
      throw InputError("Reduce: " + matching.ToString() +
                       " is not a matching");
    }
    covered.Insert(e.u);
    covered.Insert(e.v);
  }
  // An edge lies in N_e[M] exactly when it touches a vertex covered by M.
  Graph out(g.order());
  for (const Edge& e : g.Edges()) {
    if (!covered.Contains(e.u) && !covered.Contains(e.v)) {
      out.AddEdge(e.u, e.v);
    }
  }
  return out;
}

Graph DropIsolates(const Graph& g, std::vector<int>* old_to_new) {
  VertexSet keep;
  for (int v = 0; v < g.order(); ++v) {
    if (g.Degree(v) > 0) keep.Insert(v);
  }
  return InducedSubgraph(g, keep, old_to_new);
}

std::optional<BipartitionInfo> Bipartition(const Graph& g) {
  BipartitionInfo info;
  for (VertexSet comp : Components(g)) {
    VertexSet side[2];
    side[0] = VertexSet::Single(comp.First());
    VertexSet frontier = side[0];
    VertexSet seen = side[0];
    int parity = 0;
    while (!frontier.empty()) {
      parity ^= 1;
      VertexSet next;
      for (int v : frontier) next |= g.Neighbors(v);
      frontier = next - seen;
      side[parity] |= frontier;
      seen |= frontier;
    }
    for (int v : side[0]) {
      if (!(g.Neighbors(v) & side[0]).empty()) return std::nullopt;
    }
    for (int v : side[1]) {
      if (!(g.Neighbors(v) & side[1]).empty()) return std::nullopt;
    }
    if (side[1].size() < side[0].size()) std::swap(side[0], side[1]);
    info.a |= side[0];
    info.b |= side[1];
  }
  return info;
}

}  // namespace edgedom
