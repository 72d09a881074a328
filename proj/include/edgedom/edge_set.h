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

#ifndef EDGEDOM_EDGE_SET_H_
#define EDGEDOM_EDGE_SET_H_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "edgedom/graph.h"

namespace edgedom {

// A set of edges kept sorted in canonical edge order. Used for matchings,
// edge dominating sets and edge neighborhoods alike.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector(edges)) {}
  explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  bool Contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }
  void Insert(const Edge& e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
  }
  void Erase(const Edge& e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) edges_.erase(it);
  }

  EdgeSet Union(const EdgeSet& o) const {
    std::vector<Edge> out;
    std::set_union(edges_.begin(), edges_.end(), o.edges_.begin(),
                   o.edges_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
  }
  EdgeSet Intersection(const EdgeSet& o) const {
    std::vector<Edge> out;
    std::set_intersection(edges_.begin(), edges_.end(), o.edges_.begin(),
                          o.edges_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
  }
  EdgeSet Difference(const EdgeSet& o) const {
    std::vector<Edge> out;
    std::set_difference(edges_.begin(), edges_.end(), o.edges_.begin(),
                        o.edges_.end(), std::back_inserter(out));
    return EdgeSet(std::move(out));
  }

  // Vertices touched by some member.
  VertexSet Endpoints() const {
    VertexSet s;
    for (const Edge& e : edges_) {
      s.Insert(e.u);
      s.Insert(e.v);
    }
    return s;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool operator==(const EdgeSet&) const = default;

  std::string ToString() const {
    std::string s = "{";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i > 0) s += ", ";
      s += std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v);
    }
    return s + "}";
  }

 private:
  std::vector<Edge> edges_;
};

// Positions of a graph's edges in its canonical enumeration, plus per-edge
// closed edge neighborhoods as bit masks. Requires at most 64 edges.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g);

  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // -1 when {u, v} is not an edge.
  int IndexOf(int u, int v) const { return index_[u * order_ + v]; }
  int IndexOf(const Edge& e) const { return IndexOf(e.u, e.v); }
  // N_e[f] as a mask over edge indices: f and every edge sharing an endpoint.
  std::uint64_t ClosedNeighborhood(int i) const { return closed_[i]; }
  // Edges incident to vertex v.
  std::uint64_t Incident(int v) const { return incident_[v]; }
  std::uint64_t All() const {
    return edges_.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << edges_.size()) - 1;
  }

  // Throws InputError if some member of `s` is not an edge of the graph.
  std::uint64_t ToMask(const EdgeSet& s) const;
  EdgeSet FromMask(std::uint64_t mask) const;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> index_;
  std::vector<std::uint64_t> closed_;
  std::vector<std::uint64_t> incident_;
};

}  // namespace edgedom

#endif  // EDGEDOM_EDGE_SET_H_
