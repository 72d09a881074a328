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

#ifndef EDGEDOM_DOMINATION_H_
#define EDGEDOM_DOMINATION_H_

#include <functional>
#include <optional>
#include <vector>

#include "edgedom/edge_set.h"
#include "edgedom/graph.h"
#include "edgedom/structure.h"

namespace edgedom {

// The exhaustive oracles refuse graphs with more edges than `edge_cap`
// (hard ceiling 64) by throwing ResourceLimitError.
struct OracleOptions {
  int edge_cap = 40;
};

// gamma_prime <= alpha_prime <= upper_gamma_prime holds for every graph.
// well_edge_dominated holds iff gamma_prime == upper_gamma_prime.
struct DominationProfile {
  int gamma_prime = 0;        // minimum edge dominating set
  int alpha_prime = 0;        // maximum matching
  int upper_gamma_prime = 0;  // largest minimal edge dominating set
  bool equimatchable = true;
  bool well_edge_dominated = true;
};

// `witness` is a private edge neighbor of `member`: the only edge of the
// dominating set in N_e[witness] is `member`. witness == member is allowed.
struct PrivateNeighborWitness {
  Edge member;
  Edge witness;
};

// Visitors return false to stop an enumeration early.
using EdgeSetVisitor = std::function<bool(const EdgeSet&)>;

bool IsMatching(const Graph& g, const EdgeSet& f);
bool IsMaximalMatching(const Graph& g, const EdgeSet& f);
// Every inclusion-maximal matching exactly once.
void ForEachMaximalMatching(const Graph& g, const EdgeSetVisitor& visit,
                            const OracleOptions& options = {});
int MatchingNumber(const Graph& g, const OracleOptions& options = {});

bool IsEdgeDominating(const Graph& g, const EdgeSet& d);
// One private-neighbor witness per member when d is a minimal edge
// dominating set; nullopt when d does not dominate or is not minimal.
std::optional<std::vector<PrivateNeighborWitness>> MinimalityWitnesses(
    const Graph& g, const EdgeSet& d);
bool IsMinimalEdgeDominating(const Graph& g, const EdgeSet& d);

// Every inclusion-minimal edge dominating set exactly once.
void ForEachMinimalEdgeDominatingSet(const Graph& g,
                                     const EdgeSetVisitor& visit,
                                     const OracleOptions& options = {});
int EdgeDominationNumber(const Graph& g, const OracleOptions& options = {});
int UpperEdgeDominationNumber(const Graph& g,
                              const OracleOptions& options = {});

// Component-wise: a disconnected graph qualifies iff every component does.
bool IsEquimatchable(const Graph& g, const OracleOptions& options = {});
bool IsWellEdgeDominated(const Graph& g, const OracleOptions& options = {});

// Parameters are summed over components.
DominationProfile ComputeProfile(const Graph& g,
                                 const OracleOptions& options = {});

struct RandomlyMatchableCheck {
  enum class Shape { kNone, kCompleteEven, kCompleteBipartiteBalanced };
  bool oracle = false;  // equimatchable with a perfect matching
  Shape shape = Shape::kNone;
  bool structural() const { return shape != Shape::kNone; }
};

// Requires a connected graph. Computes the oracle verdict and whether g is
// K_{2k} or K_{k,k} without reconciling them.
RandomlyMatchableCheck CheckRandomlyMatchable(
    const Graph& g, const OracleOptions& options = {});
// As above, but throws std::logic_error if the two verdicts disagree.
bool IsRandomlyMatchable(const Graph& g, const OracleOptions& options = {});

struct DetachabilityReport {
  bool detachable = false;           // G - v is well-edge-dominated
  bool strongly_detachable = false;  // and N_G(v) are supports in G - v
  bool disconnects = false;          // G - v has several components
  int gamma_prime_without = 0;       // gamma'(G - v)
};

// Requires g connected, bipartite per `bip`, well-edge-dominated, with
// |A| < |B| and v in B; throws PreconditionError otherwise.
DetachabilityReport AnalyzeDetachability(const Graph& g,
                                         const BipartitionInfo& bip, int v,
                                         const OracleOptions& options = {});
bool IsDetachable(const Graph& g, const BipartitionInfo& bip, int v,
                  const OracleOptions& options = {});
bool IsStronglyDetachable(const Graph& g, const BipartitionInfo& bip, int v,
                          const OracleOptions& options = {});

// A minimal edge dominating set of g with no edge at y. A greedy pass covers
// N(y) through edges into A - {y} (lowest choices first) and then matches the
// rest of A; if that is not minimal, the minimal sets are searched in order.
// Requires g connected, bipartite per `bip`, well-edge-dominated, |A| < |B|,
// y in A and y not a support vertex.
EdgeSet EdsAvoidingVertex(const Graph& g, const BipartitionInfo& bip, int y,
                          const OracleOptions& options = {});

}  // namespace edgedom

#endif  // EDGEDOM_DOMINATION_H_
