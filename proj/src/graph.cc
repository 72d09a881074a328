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

#include "edgedom/graph.h"

#include <string>

#include "edgedom/error.h"

namespace edgedom {
namespace {

void CheckOrder(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) +
                     " outside 0.." + std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { CheckOrder(n); }

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n) {
  for (const auto& [u, v] : edges) AddEdge(u, v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) AddEdge(e.u, e.v);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

VertexSet Graph::NeighborsOf(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= Neighbors(v);
  return out - s;
}

void Graph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} out of range for order " + std::to_string(n_));
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::RemoveEdge(int u, int v) {
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::AddVertex() {
  CheckOrder(n_ + 1);
  return n_++;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t later = adj_[u] & ~((std::uint64_t{2} << u) - 1);
    for (int v : VertexSet(later)) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] != o.adj_[v]) return false;
  }
  return true;
}

Graph InducedSubgraph(const Graph& g, VertexSet keep,
                      std::vector<int>* old_to_new) {
  std::vector<int> map(g.order(), -1);
  int next = 0;
  for (int v : keep) map[v] = next++;
  Graph out(next);
  for (int u : keep) {
    for (int w : g.Neighbors(u) & keep) {
      if (u < w) out.AddEdge(map[u], map[w]);
    }
  }
  if (old_to_new != nullptr) *old_to_new = std::move(map);
  return out;
}

Graph RemoveVertex(const Graph& g, int v) {
  return InducedSubgraph(g, g.Vertices() - VertexSet::Single(v));
}

Graph RemoveVertices(const Graph& g, VertexSet s) {
  return InducedSubgraph(g, g.Vertices() - s);
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.Edges()) out.AddEdge(e.u, e.v);
  for (const Edge& e : b.Edges()) {
    out.AddEdge(e.u + a.order(), e.v + a.order());
  }
  return out;
}

Graph Relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (const Edge& e : g.Edges()) out.AddEdge(perm[e.u], perm[e.v]);
  return out;
}

Graph Complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.HasEdge(u, v)) out.AddEdge(u, v);
    }
  }
  return out;
}

std::vector<VertexSet> Components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.Vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::Single(unseen.First());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.Neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool IsConnected(const Graph& g) { return Components(g).size() <= 1; }

VertexSet CutVertices(const Graph& g) {
  VertexSet cuts;
  const int before = static_cast<int>(Components(g).size());
  for (int v = 0; v < g.order(); ++v) {
    if (g.Degree(v) < 2) continue;
    Graph h = RemoveVertex(g, v);
    if (static_cast<int>(Components(h).size()) > before) cuts.Insert(v);
  }
  return cuts;
}

}  // namespace edgedom
