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

#include "edgedom/edge_set.h"

#include "edgedom/error.h"

namespace edgedom {

EdgeIndex::EdgeIndex(const Graph& g)
    : order_(g.order()),
      edges_(g.Edges()),
      index_(static_cast<std::size_t>(g.order()) * g.order(), -1),
      incident_(g.order(), 0) {
  if (edges_.size() > 64) {
    throw ResourceLimitError("edge-indexed structures support at most 64 "
                             "edges, graph has " +
                             std::to_string(edges_.size()));
  }
  for (int i = 0; i < size(); ++i) {
    const Edge& e = edges_[i];
    index_[e.u * order_ + e.v] = i;
    index_[e.v * order_ + e.u] = i;
    incident_[e.u] |= std::uint64_t{1} << i;
    incident_[e.v] |= std::uint64_t{1} << i;
  }
  closed_.resize(edges_.size());
  for (int i = 0; i < size(); ++i) {
    closed_[i] = incident_[edges_[i].u] | incident_[edges_[i].v];
  }
}

std::uint64_t EdgeIndex::ToMask(const EdgeSet& s) const {
  std::uint64_t mask = 0;
  for (const Edge& e : s) {
    const int i = (e.u < order_ && e.v < order_) ? IndexOf(e) : -1;
    if (i < 0) {
      throw InputError("edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " is not in the graph");
    }
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

EdgeSet EdgeIndex::FromMask(std::uint64_t mask) const {
  std::vector<Edge> out;
  for (int i : VertexSet(mask)) out.push_back(edges_[i]);
  return EdgeSet(std::move(out));
}

}  // namespace edgedom
