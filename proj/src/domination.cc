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

#include "edgedom/domination.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "edgedom/error.h"

namespace edgedom {
namespace {

using Mask = std::uint64_t;

inline Mask Bit(int i) { return Mask{1} << i; }

void CheckCap(const Graph& g, const OracleOptions& options) {
  const int cap = std::min(options.edge_cap, 64);
  const int m = g.size();
  if (m > cap) {
    throw ResourceLimitError("graph has " + std::to_string(m) +
                             " edges; the exhaustive oracles accept at most " +
                             std::to_string(cap));
  }
}

// Each member of d needs an edge f in N_e[member] whose closed neighborhood
// meets d in that member alone.
bool AllPrivate(const EdgeIndex& idx, Mask d) {
  for (Mask rest = d; rest != 0; rest &= rest - 1) {
    const int e = std::countr_zero(rest);
    bool found = false;
    for (Mask nb = idx.ClosedNeighborhood(e); nb != 0 && !found; nb &= nb - 1) {
      const int f = std::countr_zero(nb);
      found = (idx.ClosedNeighborhood(f) & d) == Bit(e);
    }
    if (!found) return false;
  }
  return true;
}

// Branches on the lowest undominated edge. Candidate i is taken in its branch
// and excluded from the later siblings, so every minimal set appears once.
class MinimalEdsEnumerator {
 public:
  MinimalEdsEnumerator(const EdgeIndex& idx,
                       const std::function<bool(Mask)>& visit)
      : idx_(idx), visit_(visit), all_(idx.All()) {}

  void Run() {
    if (all_ == 0) {
      visit_(0);
      return;
    }
    Recurse(0, 0, 0);
  }

 private:
  bool Recurse(Mask d, Mask excluded, Mask dominated) {
    const Mask open = all_ & ~dominated;
    if (open == 0) return visit_(d);
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      if ((idx_.ClosedNeighborhood(std::countr_zero(rest)) & ~excluded) == 0) {
        return true;
      }
    }
    const int f = std::countr_zero(open);
    Mask candidates = idx_.ClosedNeighborhood(f) & ~excluded;
    for (; candidates != 0; candidates &= candidates - 1) {
      const int c = std::countr_zero(candidates);
      const Mask next = d | Bit(c);
      if (AllPrivate(idx_, next)) {
        if (!Recurse(next, excluded, dominated | idx_.ClosedNeighborhood(c))) {
          return false;
        }
      }
      excluded |= Bit(c);
    }
    return true;
  }

  const EdgeIndex& idx_;
  const std::function<bool(Mask)>& visit_;
  const Mask all_;
};

// Same scheme for maximal matchings: branch on the lowest edge with both
// endpoints exposed over the exposed edges meeting it.
class MaximalMatchingEnumerator {
 public:
  MaximalMatchingEnumerator(const EdgeIndex& idx,
                            const std::function<bool(Mask)>& visit)
      : idx_(idx), visit_(visit) {}

  void Run() { Recurse(0, 0, 0); }

 private:
  Mask Free(std::uint64_t covered) const {
    Mask blocked = 0;
    for (std::uint64_t r = covered; r != 0; r &= r - 1) {
      blocked |= idx_.Incident(std::countr_zero(r));
    }
    return idx_.All() & ~blocked;
  }

  bool Recurse(Mask m, Mask excluded, std::uint64_t covered) {
    const Mask free = Free(covered);
    if (free == 0) return visit_(m);
    const Edge& f = idx_.edge(std::countr_zero(free));
    Mask candidates =
        (idx_.Incident(f.u) | idx_.Incident(f.v)) & free & ~excluded;
    for (; candidates != 0; candidates &= candidates - 1) {
      const int c = std::countr_zero(candidates);
      const Edge& e = idx_.edge(c);
      if (!Recurse(m | Bit(c), excluded, covered | Bit(e.u) | Bit(e.v))) {
        return false;
      }
      excluded |= Bit(c);
    }
    return true;
  }

  const EdgeIndex& idx_;
  const std::function<bool(Mask)>& visit_;
};

// Connected pieces that carry at least one edge.
std::vector<Graph> EdgeComponents(const Graph& g) {
  std::vector<Graph> out;
  for (VertexSet comp : Components(g)) {
    if (comp.size() > 1) out.push_back(InducedSubgraph(g, comp));
  }
  return out;
}

struct SizeRange {
  int lo = 0;
  int hi = 0;
  bool uniform = true;
};

// With stop_on_mismatch the scan ends at the first size that differs from
// the first one seen; lo/hi are then only partial.
SizeRange MinimalEdsSizes(const Graph& g, bool stop_on_mismatch) {
  EdgeIndex idx(g);
  SizeRange r;
  bool first = true;
  std::function<bool(Mask)> visit = [&](Mask d) {
    const int k = std::popcount(d);
    if (first) {
      r.lo = r.hi = k;
      first = false;
      return true;
    }
    r.lo = std::min(r.lo, k);
    r.hi = std::max(r.hi, k);
    if (r.lo != r.hi) {
      r.uniform = false;
      return !stop_on_mismatch;
    }
    return true;
  };
  MinimalEdsEnumerator(idx, visit).Run();
  return r;
}

SizeRange MaximalMatchingSizes(const Graph& g, bool stop_on_mismatch) {
  EdgeIndex idx(g);
  SizeRange r;
  bool first = true;
  std::function<bool(Mask)> visit = [&](Mask m) {
    const int k = std::popcount(m);
    if (first) {
      r.lo = r.hi = k;
      first = false;
      return true;
    }
    r.lo = std::min(r.lo, k);
    r.hi = std::max(r.hi, k);
    if (r.lo != r.hi) {
      r.uniform = false;
      return !stop_on_mismatch;
    }
    return true;
  };
  MaximalMatchingEnumerator(idx, visit).Run();
  return r;
}

void RequireBipartiteWedSetting(const Graph& g, const BipartitionInfo& bip,
                                const OracleOptions& options) {
  if (!IsConnected(g)) throw PreconditionError("graph must be connected");
  if ((bip.a | bip.b) != g.Vertices() || !(bip.a & bip.b).empty()) {
    throw PreconditionError("A and B must partition the vertex set");
  }
  for (int v : bip.a) {
    if (!(g.Neighbors(v) & bip.a).empty()) {
      throw PreconditionError("A is not independent");
    }
  }
  for (int v : bip.b) {
    if (!(g.Neighbors(v) & bip.b).empty()) {
      throw PreconditionError("B is not independent");
    }
  }
  if (!bip.a_smaller()) throw PreconditionError("requires |A| < |B|");
  if (!IsWellEdgeDominated(g, options)) {
    throw PreconditionError("graph must be well-edge-dominated");
  }
}

}  // namespace

bool IsMatching(const Graph& g, const EdgeSet& f) {
  VertexSet seen;
  for (const Edge& e : f) {
    if (e.v >= g.order() || !g.HasEdge(e.u, e.v)) return false;
    if (seen.Contains(e.u) || seen.Contains(e.v)) return false;
    seen.Insert(e.u);
    seen.Insert(e.v);
  }
  return true;
}

bool IsMaximalMatching(const Graph& g, const EdgeSet& f) {
  if (!IsMatching(g, f)) return false;
  const VertexSet covered = f.Endpoints();
  for (const Edge& e : g.Edges()) {
    if (!covered.Contains(e.u) && !covered.Contains(e.v)) return false;
  }
  return true;
}

void ForEachMaximalMatching(const Graph& g, const EdgeSetVisitor& visit,
                            const OracleOptions& options) {
  CheckCap(g, options);
  EdgeIndex idx(g);
  std::function<bool(Mask)> adapter = [&](Mask m) {
    return visit(idx.FromMask(m));
  };
  MaximalMatchingEnumerator(idx, adapter).Run();
}

int MatchingNumber(const Graph& g, const OracleOptions& options) {
  CheckCap(g, options);
  int total = 0;
  for (const Graph& c : EdgeComponents(g)) {
    total += MaximalMatchingSizes(c, false).hi;
  }
  return total;
}

bool IsEdgeDominating(const Graph& g, const EdgeSet& d) {
  VertexSet covered;
  for (const Edge& e : d) {
    if (e.v >= g.order() || !g.HasEdge(e.u, e.v)) return false;
    covered.Insert(e.u);
    covered.Insert(e.v);
  }
  for (const Edge& e : g.Edges()) {
    if (!covered.Contains(e.u) && !covered.Contains(e.v)) return false;
  }
  return true;
}

std::optional<std::vector<PrivateNeighborWitness>> MinimalityWitnesses(
    const Graph& g, const EdgeSet& d) {
  if (!IsEdgeDominating(g, d)) return std::nullopt;
  const std::vector<Edge> edges = g.Edges();
  std::vector<PrivateNeighborWitness> out;
  for (const Edge& member : d) {
    bool found = false;
    for (const Edge& f : edges) {
      if (!f.SharesEndpoint(member)) continue;
      int hits = 0;
      for (const Edge& other : d) {
        if (other.SharesEndpoint(f)) ++hits;
      }
      if (hits == 1) {
        out.push_back({member, f});
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

bool IsMinimalEdgeDominating(const Graph& g, const EdgeSet& d) {
  return MinimalityWitnesses(g, d).has_value();
}

void ForEachMinimalEdgeDominatingSet(const Graph& g,
                                     const EdgeSetVisitor& visit,
                                     const OracleOptions& options) {
  CheckCap(g, options);
  EdgeIndex idx(g);
  std::function<bool(Mask)> adapter = [&](Mask d) {
    return visit(idx.FromMask(d));
  };
  MinimalEdsEnumerator(idx, adapter).Run();
}

int EdgeDominationNumber(const Graph& g, const OracleOptions& options) {
  CheckCap(g, options);
  int total = 0;
  for (const Graph& c : EdgeComponents(g)) {
    total += MinimalEdsSizes(c, false).lo;
  }
  return total;
}

int UpperEdgeDominationNumber(const Graph& g, const OracleOptions& options) {
  CheckCap(g, options);
  int total = 0;
  for (const Graph& c : EdgeComponents(g)) {
    total += MinimalEdsSizes(c, false).hi;
  }
  return total;
}

bool IsEquimatchable(const Graph& g, const OracleOptions& options) {
  CheckCap(g, options);
  for (const Graph& c : EdgeComponents(g)) {
    if (!MaximalMatchingSizes(c, true).uniform) return false;
  }
  return true;
}

bool IsWellEdgeDominated(const Graph& g, const OracleOptions& options) {
  CheckCap(g, options);
  const std::vector<Graph> parts = EdgeComponents(g);
  // Well-edge-dominated graphs are equimatchable, and matchings are far
  // cheaper to enumerate.
  for (const Graph& c : parts) {
    if (!MaximalMatchingSizes(c, true).uniform) return false;
  }
  for (const Graph& c : parts) {
    if (!MinimalEdsSizes(c, true).uniform) return false;
  }
  return true;
}

DominationProfile ComputeProfile(const Graph& g,
                                 const OracleOptions& options) {
  CheckCap(g, options);
  DominationProfile p;
  for (const Graph& c : EdgeComponents(g)) {
    const SizeRange eds = MinimalEdsSizes(c, false);
    const SizeRange mm = MaximalMatchingSizes(c, false);
    p.gamma_prime += eds.lo;
    p.upper_gamma_prime += eds.hi;
    p.alpha_prime += mm.hi;
    p.equimatchable = p.equimatchable && mm.uniform;
    p.well_edge_dominated = p.well_edge_dominated && eds.uniform;
  }
  return p;
}

RandomlyMatchableCheck CheckRandomlyMatchable(const Graph& g,
                                              const OracleOptions& options) {
  if (!IsConnected(g)) {
    throw PreconditionError("randomly matchable test needs a connected graph");
  }
  RandomlyMatchableCheck out;
  const int n = g.order();
  out.oracle = n % 2 == 0 && n > 0 && IsEquimatchable(g, options) &&
               2 * MatchingNumber(g, options) == n;
  if (n % 2 == 0 && n > 0) {
    if (g.size() == n * (n - 1) / 2) {
      out.shape = RandomlyMatchableCheck::Shape::kCompleteEven;
    } else if (auto bip = Bipartition(g);
               bip && bip->a.size() == bip->b.size() &&
               g.size() == bip->a.size() * bip->b.size()) {
      out.shape = RandomlyMatchableCheck::Shape::kCompleteBipartiteBalanced;
    }
  }
  return out;
}

bool IsRandomlyMatchable(const Graph& g, const OracleOptions& options) {
  const RandomlyMatchableCheck c = CheckRandomlyMatchable(g, options);
  if (c.oracle != c.structural()) {
    throw std::logic_error(
        "randomly matchable: oracle and structural verdicts disagree");
  }
  return c.oracle;
}

DetachabilityReport AnalyzeDetachability(const Graph& g,
                                         const BipartitionInfo& bip, int v,
                                         const OracleOptions& options) {
  if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
  RequireBipartiteWedSetting(g, bip, options);
  if (!bip.b.Contains(v)) throw PreconditionError("vertex must lie in B");

  std::vector<int> map;
  const Graph h = InducedSubgraph(g, g.Vertices() - VertexSet::Single(v), &map);
  DetachabilityReport r;
  r.detachable = IsWellEdgeDominated(h, options);
  r.disconnects = !IsConnected(h);
  r.gamma_prime_without = EdgeDominationNumber(h, options);
  if (r.detachable) {
    const VertexSet supports = SupportVertices(h);
    r.strongly_detachable = true;
    for (int w : g.Neighbors(v)) {
      if (!supports.Contains(map[w])) r.strongly_detachable = false;
    }
  }
  return r;
}

bool IsDetachable(const Graph& g, const BipartitionInfo& bip, int v,
                  const OracleOptions& options) {
  return AnalyzeDetachability(g, bip, v, options).detachable;
}

bool IsStronglyDetachable(const Graph& g, const BipartitionInfo& bip, int v,
                          const OracleOptions& options) {
  return AnalyzeDetachability(g, bip, v, options).strongly_detachable;
}

EdgeSet EdsAvoidingVertex(const Graph& g, const BipartitionInfo& bip, int y,
                          const OracleOptions& options) {
  if (y < 0 || y >= g.order()) throw InputError("vertex out of range");
  RequireBipartiteWedSetting(g, bip, options);
  if (!bip.a.Contains(y)) throw PreconditionError("vertex must lie in A");
  if (SupportVertices(g).Contains(y)) {
    throw PreconditionError("vertex must not be a support vertex");
  }

  EdgeSet d;
  VertexSet covered;
  // Every edge at y must be dominated through its B endpoint.
  for (int b : g.Neighbors(y)) {
    if (covered.Contains(b)) continue;
    const VertexSet options_a = (g.Neighbors(b) & bip.a) - covered -
                                VertexSet::Single(y);
    if (options_a.empty()) continue;
    const int a = options_a.First();
    d.Insert(Edge(a, b));
    covered.Insert(a);
    covered.Insert(b);
  }
  // Then every remaining edge has its A endpoint outside {y}; cover it.
  for (int a : bip.a - VertexSet::Single(y) - covered) {
    const VertexSet free_b = g.Neighbors(a) - covered;
    if (free_b.empty()) continue;
    const int b = free_b.First();
    d.Insert(Edge(a, b));
    covered.Insert(a);
    covered.Insert(b);
  }
  bool avoids = true;
  for (const Edge& e : d) avoids = avoids && !e.Touches(y);
  if (avoids && IsMinimalEdgeDominating(g, d)) return d;

  // The greedy pass can paint itself into a corner; fall back to search.
  std::optional<EdgeSet> found;
  ForEachMinimalEdgeDominatingSet(
      g,
      [&](const EdgeSet& s) {
        for (const Edge& e : s) {
          if (e.Touches(y)) return true;
        }
        found = s;
        return false;
      },
      options);
  if (!found) {
    throw std::logic_error(
        "no minimal edge dominating set avoids the vertex");
  }
  return *found;
}

}  // namespace edgedom
