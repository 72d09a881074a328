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

#ifndef EDGEDOM_TESTS_SUPPORT_ORACLES_H_
#define EDGEDOM_TESTS_SUPPORT_ORACLES_H_

// Slow reference implementations used only by tests. Nothing here calls the
// library's enumerators or canonical labeling.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "edgedom/families.h"
#include "edgedom/graph.h"

namespace edgedom::testing {

// Minimum over all n! relabelings of the packed upper triangle.
std::string BruteCanonicalKey(const Graph& g);
bool BruteIsomorphic(const Graph& a, const Graph& b);

// Subset scan over all 2^|E| edge sets. Requires |E| <= 20.
struct BruteDomination {
  int gamma_prime = 0;
  int upper_gamma_prime = 0;
  int alpha_prime = 0;
  std::set<int> minimal_eds_sizes;
  std::set<int> maximal_matching_sizes;
  long minimal_eds_count = 0;
  long maximal_matching_count = 0;
  bool wed() const { return minimal_eds_sizes.size() <= 1; }
  bool equimatchable() const { return maximal_matching_sizes.size() <= 1; }
};
BruteDomination BruteForceDomination(const Graph& g);

// Length of a shortest cycle by DFS over simple paths; 0 for forests.
int DfsGirth(const Graph& g);

// Reference graph6 encoder following the format description byte by byte.
std::string ReferenceGraph6(const Graph& g);

Graph RandomGraph(int n, double p, std::mt19937_64& rng);
Graph RandomConnectedGraph(int n, double p, std::mt19937_64& rng);
// A random simple graph with at most max_edges edges on n vertices.
Graph RandomSparseGraph(int n, int max_edges, std::mt19937_64& rng);

// Connected bipartite WED graphs of order 2..max_order with |A| < |B|.
std::vector<Graph> BipartiteWedCores(int max_order);

// A random recipe that passes ValidateRecipe and builds a graph of order at
// most max_order with at least one attachment.
GClassRecipe RandomValidRecipe(const std::vector<Graph>& cores, int max_order,
                               std::mt19937_64& rng);
int BuiltOrder(const GClassRecipe& recipe);

}  // namespace edgedom::testing

#endif  // EDGEDOM_TESTS_SUPPORT_ORACLES_H_
