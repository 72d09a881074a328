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

#ifndef EDGEDOM_STRUCTURE_H_
#define EDGEDOM_STRUCTURE_H_

#include <array>
#include <optional>
#include <vector>

#include "edgedom/edge_set.h"
#include "edgedom/graph.h"

namespace edgedom {

// Length of a shortest cycle; nullopt for forests.
std::optional<int> Girth(const Graph& g);

// Searches for an induced copy of `pattern` in `host`. On success returns
// map[p] = host vertex for every pattern vertex p.
std::optional<std::vector<int>> ContainsInduced(const Graph& pattern,
                                                const Graph& host);

using Triangle = std::array<int, 3>;  // sorted ascending

std::vector<Triangle> Triangles(const Graph& g);
std::optional<Triangle> FindTriangle(const Graph& g);
bool IsK4Free(const Graph& g);
// Map order: exterior, interior, interior, exterior.
std::optional<std::vector<int>> FindDiamond(const Graph& g);
std::optional<std::vector<int>> FindHouse(const Graph& g);
// Number of 4-vertex subsets inducing a diamond (K4 minus an edge).
int CountInducedDiamonds(const Graph& g);

VertexSet Leaves(const Graph& g);
VertexSet SupportVertices(const Graph& g);

// Replaces the vertices of `s` by one new vertex adjacent to N(S) - S. The
// surviving vertices keep their relative order and the new vertex is last.
// The quotient is simple: edges inside `s` vanish. `internal_edge` is set
// when two identified vertices were adjacent.
Graph IdentifyVertices(const Graph& g, VertexSet s,
                       std::vector<int>* old_to_new = nullptr,
                       bool* internal_edge = nullptr);

// G - N_e[M]: same vertex set, with every edge of M and every edge adjacent
// to one removed. Throws InputError if M is not a matching of g.
Graph Reduce(const Graph& g, const EdgeSet& matching);
Graph DropIsolates(const Graph& g, std::vector<int>* old_to_new = nullptr);

struct BipartitionInfo {
  VertexSet a;
  VertexSet b;

  bool a_smaller() const { return a.size() < b.size(); }
  bool a_not_larger() const { return a.size() <= b.size(); }
};

// Two-coloring with the smaller class of every component placed in `a` (ties
// go to the class holding the component's lowest vertex). nullopt if g has an
// odd cycle.
std::optional<BipartitionInfo> Bipartition(const Graph& g);

}  // namespace edgedom

#endif  // EDGEDOM_STRUCTURE_H_
