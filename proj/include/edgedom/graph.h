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

#ifndef EDGEDOM_GRAPH_H_
#define EDGEDOM_GRAPH_H_

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace edgedom {

inline constexpr int kMaxVertices = 64;

// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) Insert(v);
  }

  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet Single(int v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool Contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  // Lowest member; the set must be non-empty.
  constexpr int First() const { return std::countr_zero(bits_); }

  constexpr void Insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void Erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

  class Iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> ToVector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// An undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool Touches(int w) const { return u == w || v == w; }
  bool SharesEndpoint(const Edge& o) const {
    return Touches(o.u) || Touches(o.v);
  }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1 (n <= 64). Each adjacency row is
// a single machine word. Values are plain data: copy freely.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const;  // edge count

  VertexSet Vertices() const { return VertexSet::Range(n_); }
  VertexSet Neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet ClosedNeighbors(int v) const {
    return Neighbors(v) | VertexSet::Single(v);
  }
  // N(S) - S.
  VertexSet NeighborsOf(VertexSet s) const;
  int Degree(int v) const { return std::popcount(adj_[v]); }
  bool HasEdge(int u, int v) const { return (adj_[u] >> v) & 1; }
  std::uint64_t row(int v) const { return adj_[v]; }

  void AddEdge(int u, int v);
  void RemoveEdge(int u, int v);
  // Appends an isolated vertex and returns its id.
  int AddVertex();

  // Edges in lexicographic order of (u, v) with u < v; this is the canonical
  // edge enumeration used by every edge-indexed structure in the library.
  std::vector<Edge> Edges() const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

Graph InducedSubgraph(const Graph& g, VertexSet keep,
                      std::vector<int>* old_to_new = nullptr);
Graph RemoveVertex(const Graph& g, int v);
Graph RemoveVertices(const Graph& g, VertexSet s);
// Vertices of `b` are shifted by a.order().
Graph DisjointUnion(const Graph& a, const Graph& b);
Graph Relabel(const Graph& g, const std::vector<int>& perm);  // v -> perm[v]
Graph Complement(const Graph& g);

std::vector<VertexSet> Components(const Graph& g);
bool IsConnected(const Graph& g);
// Vertices whose removal disconnects their component.
VertexSet CutVertices(const Graph& g);

}  // namespace edgedom

#endif  // EDGEDOM_GRAPH_H_
